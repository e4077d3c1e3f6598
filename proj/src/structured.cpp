#include "markov/io.hpp"

#include <charconv>
#include <sstream>

namespace markov {

namespace {

constexpr std::string_view kMagic = "markov-graph-document";
constexpr int kVersion = 1;

// Walks the document one line at a time and reports positions on failure.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next() {
    if (pos_ >= text_.size()) throw ParseError(line_no_ + 1, 1, "unexpected end of document");
    const std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) fail(1, "missing newline at end of line");
    line_ = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++line_no_;
    return line_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(line_no_ == 0 ? 1 : line_no_, column, message);
  }

  // "<key> <value>" with a single space; returns the value.
  std::string_view keyed(std::string_view key) {
    std::string_view line = next();
    if (line.substr(0, key.size()) != key || line.size() <= key.size() || line[key.size()] != ' ') {
      fail(1, "expected '" + std::string(key) + " <value>'");
    }
    return line.substr(key.size() + 1);
  }

  std::size_t value_column(std::string_view key) const { return key.size() + 2; }

  BigInt integer(std::string_view text, std::size_t column) const {
    auto v = parse_bigint(text);
    if (!v) fail(column, "expected a decimal integer, got '" + std::string(text) + "'");
    return *v;
  }

  std::size_t count(std::string_view text, std::size_t column) const {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
      fail(column, "expected a non-negative count, got '" + std::string(text) + "'");
    }
    return v;
  }

  Triple triple(std::string_view text, std::size_t column) const {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
      fail(column, "expected a triple '(a,b,c)'");
    }
    std::array<BigInt, 3> e;
    std::size_t start = 1;
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t stop = i < 2 ? text.find(',', start) : text.size() - 1;
      if (stop == std::string_view::npos) fail(column + start, "triple needs three entries");
      e[i] = integer(text.substr(start, stop - start), column + start);
      start = stop + 1;
    }
    if (e[0] > e[1] || e[1] > e[2]) fail(column, "triple entries must be ascending");
    return Triple(e[0], e[1], e[2]);
  }

  std::pair<std::size_t, std::size_t> pair_of_counts(std::string_view line) const {
    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos) fail(1, "expected two numbers separated by a space");
    return {count(line.substr(0, space), 1), count(line.substr(space + 1), space + 2)};
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::string_view line_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

}  // namespace

std::string render_structured(const GraphDocument& doc) {
  std::ostringstream out;
  out << kMagic << ' ' << kVersion << '\n';
  out << "seed " << doc.seed.to_string() << '\n';
  out << "class " << class_id(doc.graph_class) << '\n';
  out << "k " << to_string(doc.k) << '\n';
  out << "norm-bound " << to_string(doc.norm_bound) << '\n';
  out << "closed " << (doc.closed ? "true" : "false") << '\n';
  out << "bases " << doc.bases.size() << '\n';
  for (const Triple& t : doc.bases) out << t.to_string() << '\n';
  out << "vertices " << doc.vertices.size() << '\n';
  for (const Triple& t : doc.vertices) out << t.to_string() << '\n';
  out << "edges " << doc.edges.size() << '\n';
  for (const auto& [i, j] : doc.edges) out << i << ' ' << j << '\n';
  out << "loops " << doc.loops.size() << '\n';
  for (const auto& [v, c] : doc.loops) out << v << ' ' << c << '\n';
  out << "end\n";
  return out.str();
}

GraphDocument parse_structured(std::string_view text) {
  LineReader in(text);
  GraphDocument doc;

  const std::string_view version = in.keyed(kMagic);
  if (in.count(version, in.value_column(kMagic)) != kVersion) {
    in.fail(in.value_column(kMagic), "unsupported version '" + std::string(version) + "'");
  }
  doc.seed = in.triple(in.keyed("seed"), in.value_column("seed"));
  {
    const std::size_t id = in.count(in.keyed("class"), in.value_column("class"));
    if (id < 1 || id > 9) in.fail(in.value_column("class"), "class id must be 1..9");
    doc.graph_class = class_from_id(static_cast<int>(id));
  }
  doc.k = in.integer(in.keyed("k"), in.value_column("k"));
  doc.norm_bound = in.integer(in.keyed("norm-bound"), in.value_column("norm-bound"));
  {
    const std::string_view closed = in.keyed("closed");
    if (closed != "true" && closed != "false") {
      in.fail(in.value_column("closed"), "closed must be 'true' or 'false'");
    }
    doc.closed = closed == "true";
  }

  const std::size_t base_count = in.count(in.keyed("bases"), in.value_column("bases"));
  for (std::size_t i = 0; i < base_count; ++i) doc.bases.push_back(in.triple(in.next(), 1));

  const std::size_t vertex_count = in.count(in.keyed("vertices"), in.value_column("vertices"));
  for (std::size_t i = 0; i < vertex_count; ++i) doc.vertices.push_back(in.triple(in.next(), 1));

  const std::size_t edge_count = in.count(in.keyed("edges"), in.value_column("edges"));
  for (std::size_t e = 0; e < edge_count; ++e) {
    auto [i, j] = in.pair_of_counts(in.next());
    if (i >= vertex_count || j >= vertex_count) in.fail(1, "edge index out of range");
    if (i >= j) in.fail(1, "edge must be written as 'i j' with i < j");
    if (!doc.edges.empty() && doc.edges.back() >= Edge{i, j}) in.fail(1, "edges must be ascending");
    doc.edges.emplace_back(i, j);
  }

  const std::size_t loop_count = in.count(in.keyed("loops"), in.value_column("loops"));
  for (std::size_t l = 0; l < loop_count; ++l) {
    auto [v, c] = in.pair_of_counts(in.next());
    if (v >= vertex_count) in.fail(1, "loop vertex index out of range");
    if (c < 1 || c > 3) in.fail(1, "loop count must be 1..3");
    if (!doc.loops.empty() && doc.loops.back().first >= v) in.fail(1, "loops must be ascending");
    doc.loops.emplace_back(v, static_cast<int>(c));
  }

  if (in.next() != "end") in.fail(1, "expected 'end'");
  if (!in.at_end()) {
    throw ParseError(in.line_no() + 1, 1, "trailing content after 'end'");
  }
  try {
    validate(doc);
  } catch (const std::invalid_argument& e) {
    throw ParseError(in.line_no(), 1, e.what());
  }
  return doc;
}

}  // namespace markov
