#ifndef MARKOV_IO_HPP
#define MARKOV_IO_HPP

#include "markov/census.hpp"
#include "markov/classifier.hpp"
#include "markov/explorer.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace markov {

/// Serializable snapshot of an exploration together with its classification.
struct GraphDocument {
  Triple seed;
  GraphClass graph_class = GraphClass::origin;
  BigInt k;
  std::vector<Triple> bases;
  std::vector<Triple> vertices;
  std::vector<Edge> edges;                         // i < j, ascending
  std::vector<std::pair<std::size_t, int>> loops;  // vertex -> count > 0, ascending
  BigInt norm_bound;
  bool closed = false;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument make_document(const Triple& seed, const BigInt& norm_bound);
GraphDocument make_document(const Triple& seed, const Classification& cls,
                            const ExplorationGraph& g);

/// Error raised by the parsers; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct DotOptions {
  bool color_bases = false;
  bool include_loops = false;
};

/// Undirected DOT. Structural data travels in custom attributes (graph-level
/// seed/class/k/norm_bound/closed, per-node base/loops) so parse_dot can
/// rebuild the document whatever the options; green fill and drawn self-edges
/// are presentation only.
std::string render_dot(const GraphDocument& doc, const DotOptions& options = {});
GraphDocument parse_dot(std::string_view text);

/// Line-oriented interchange format, see docs/structured-format.md.
std::string render_structured(const GraphDocument& doc);
GraphDocument parse_structured(std::string_view text);

/// Throws std::invalid_argument describing the first broken invariant.
void validate(const GraphDocument& doc);

std::string render_census(const CensusReport& report);

}  // namespace markov

#endif  // MARKOV_IO_HPP
