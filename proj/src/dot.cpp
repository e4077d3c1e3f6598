#include "markov/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace markov {

namespace {

std::string node_id(std::size_t i) { return "v" + std::to_string(i); }

struct Token {
  enum Kind { word, quoted, punct, end } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Tokenizer for the DOT subset emitted by render_dot.
class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token tok{Token::end, "", line_, column_};
    if (pos_ >= text_.size()) return tok;
    const char ch = text_[pos_];
    if (ch == '"') {
      advance();
      tok.kind = Token::quoted;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\') throw ParseError(line_, column_, "escapes are not supported");
        tok.text += text_[pos_];
        advance();
      }
      if (pos_ >= text_.size()) throw ParseError(tok.line, tok.column, "unterminated string");
      advance();
    } else if (ch == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      tok.kind = Token::punct;
      tok.text = "--";
      advance();
      advance();
    } else if (std::string_view("{}[]=,;").find(ch) != std::string_view::npos) {
      tok.kind = Token::punct;
      tok.text = std::string(1, ch);
      advance();
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      tok.kind = Token::word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        tok.text += text_[pos_];
        advance();
      }
    } else {
      throw ParseError(line_, column_, std::string("unexpected character '") + ch + "'");
    }
    return tok;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class DotParser {
 public:
  explicit DotParser(std::string_view text) : lex_(text) { take(); }

  GraphDocument parse() {
    expect_word("graph");
    expect_word("markov");
    expect_punct("{");
    bool have_header = false;
    std::vector<bool> base_flags;
    while (!is_punct("}")) {
      if (tok_.kind != Token::word) fail("expected a statement");
      const Token head = tok_;
      take();
      if (head.text == "graph") {
        read_header(read_attrs(), head);
        have_header = true;
      } else if (head.text == "node") {
        read_attrs();
      } else if (is_punct("--")) {
        take();
        const std::size_t i = vertex_index(head);
        if (tok_.kind != Token::word) fail("expected a node id after '--'");
        const Token other = tok_;
        take();
        const std::size_t j = vertex_index(other);
        if (i != j) {
          if (i > j) throw ParseError(head.line, head.column, "edge must be written low -- high");
          doc_.edges.emplace_back(i, j);
        }
      } else {
        const std::size_t i = vertex_index(head);
        if (i != doc_.vertices.size()) {
          throw ParseError(head.line, head.column, "node statements must be numbered in order");
        }
        read_node(read_attrs(), head, base_flags);
      }
      expect_punct(";");
    }
    take();
    if (tok_.kind != Token::end) fail("trailing content after '}'");
    if (!have_header) throw ParseError(1, 1, "missing graph attribute statement");

    for (std::size_t v = 0; v < base_flags.size(); ++v) {
      if (base_flags[v]) doc_.bases.push_back(doc_.vertices[v]);
    }
    std::sort(doc_.bases.begin(), doc_.bases.end());
    for (const auto& [i, j] : doc_.edges) {
      if (j >= doc_.vertices.size()) throw ParseError(1, 1, "edge refers to an undeclared node");
    }
    try {
      validate(doc_);
    } catch (const std::invalid_argument& e) {
      throw ParseError(tok_.line, tok_.column, e.what());
    }
    return doc_;
  }

 private:
  using Attrs = std::map<std::string, Token>;

  void take() { tok_ = lex_.next(); }
  bool is_punct(std::string_view p) const { return tok_.kind == Token::punct && tok_.text == p; }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(tok_.line, tok_.column, message);
  }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
    take();
  }
  void expect_word(std::string_view w) {
    if (tok_.kind != Token::word || tok_.text != w) fail("expected '" + std::string(w) + "'");
    take();
  }

  Attrs read_attrs() {
    Attrs attrs;
    expect_punct("[");
    while (!is_punct("]")) {
      if (tok_.kind != Token::word) fail("expected an attribute name");
      const std::string name = tok_.text;
      take();
      expect_punct("=");
      if (tok_.kind != Token::word && tok_.kind != Token::quoted) fail("expected an attribute value");
      attrs[name] = tok_;
      take();
      if (is_punct(",")) take();
    }
    take();
    return attrs;
  }

  static const Token& require(const Attrs& attrs, const std::string& name, const Token& at) {
    auto it = attrs.find(name);
    if (it == attrs.end()) throw ParseError(at.line, at.column, "missing attribute '" + name + "'");
    return it->second;
  }

  static Triple triple(const Token& tok) {
    std::string_view s = tok.text;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
      throw ParseError(tok.line, tok.column, "expected a triple '(a,b,c)'");
    }
    s = s.substr(1, s.size() - 2);
    std::array<BigInt, 3> e;
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t comma = i < 2 ? s.find(',') : s.size();
      if (comma == std::string_view::npos) throw ParseError(tok.line, tok.column, "triple needs three entries");
      auto v = parse_bigint(s.substr(0, comma));
      if (!v) throw ParseError(tok.line, tok.column, "bad integer in triple");
      e[i] = *v;
      s = i < 2 ? s.substr(comma + 1) : std::string_view{};
    }
    if (e[0] > e[1] || e[1] > e[2]) throw ParseError(tok.line, tok.column, "triple entries must be ascending");
    return Triple(e[0], e[1], e[2]);
  }

  static BigInt integer(const Token& tok) {
    auto v = parse_bigint(tok.text);
    if (!v) throw ParseError(tok.line, tok.column, "expected a decimal integer");
    return *v;
  }

  static bool boolean(const Token& tok) {
    if (tok.text != "true" && tok.text != "false") {
      throw ParseError(tok.line, tok.column, "expected 'true' or 'false'");
    }
    return tok.text == "true";
  }

  void read_header(const Attrs& attrs, const Token& at) {
    doc_.seed = triple(require(attrs, "seed", at));
    const Token& cls = require(attrs, "class", at);
    const BigInt id = integer(cls);
    if (id < 1 || id > 9) throw ParseError(cls.line, cls.column, "class id must be 1..9");
    doc_.graph_class = class_from_id(static_cast<int>(id.get_si()));
    doc_.k = integer(require(attrs, "k", at));
    doc_.norm_bound = integer(require(attrs, "norm_bound", at));
    doc_.closed = boolean(require(attrs, "closed", at));
  }

  void read_node(const Attrs& attrs, const Token& at, std::vector<bool>& base_flags) {
    doc_.vertices.push_back(triple(require(attrs, "label", at)));
    base_flags.push_back(boolean(require(attrs, "base", at)));
    const Token& loops = require(attrs, "loops", at);
    const BigInt count = integer(loops);
    if (count < 0 || count > 3) throw ParseError(loops.line, loops.column, "loops must be 0..3");
    if (count > 0) doc_.loops.emplace_back(doc_.vertices.size() - 1, static_cast<int>(count.get_si()));
  }

  static std::size_t vertex_index(const Token& tok) {
    std::size_t v = 0;
    const std::string& s = tok.text;
    if (s.size() < 2 || s[0] != 'v') throw ParseError(tok.line, tok.column, "expected a node id 'vN'");
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError(tok.line, tok.column, "expected a node id 'vN'");
    }
    return v;
  }

  DotLexer lex_;
  Token tok_{Token::end, "", 1, 1};
  GraphDocument doc_;
};

}  // namespace

std::string render_dot(const GraphDocument& doc, const DotOptions& options) {
  std::vector<int> loops(doc.vertices.size(), 0);
  for (const auto& [v, c] : doc.loops) loops.at(v) = c;

  std::ostringstream out;
  out << "graph markov {\n";
  out << "  graph [seed=\"" << doc.seed.to_string() << "\", class=\"" << class_id(doc.graph_class)
      << "\", k=\"" << to_string(doc.k) << "\", norm_bound=\"" << to_string(doc.norm_bound)
      << "\", closed=\"" << (doc.closed ? "true" : "false") << "\"];\n";
  out << "  node [shape=box];\n";
  for (std::size_t v = 0; v < doc.vertices.size(); ++v) {
    const bool is_base =
        std::binary_search(doc.bases.begin(), doc.bases.end(), doc.vertices[v]);
    out << "  " << node_id(v) << " [label=\"" << doc.vertices[v].to_string() << "\", base=\""
        << (is_base ? "true" : "false") << "\", loops=\"" << loops[v] << "\"";
    if (options.color_bases && is_base) out << ", style=\"filled\", fillcolor=\"green\"";
    out << "];\n";
  }
  for (const auto& [i, j] : doc.edges) out << "  " << node_id(i) << " -- " << node_id(j) << ";\n";
  if (options.include_loops) {
    for (std::size_t v = 0; v < loops.size(); ++v) {
      for (int l = 0; l < loops[v]; ++l) out << "  " << node_id(v) << " -- " << node_id(v) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

GraphDocument parse_dot(std::string_view text) { return DotParser(text).parse(); }

}  // namespace markov
