#ifndef MARKOV_EXPLORER_HPP
#define MARKOV_EXPLORER_HPP

#include "markov/classifier.hpp"
#include "markov/triple.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace markov {

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite explored part of a component.
///
/// Vertices with norm <= norm_bound are expanded; their neighbours above the
/// bound are kept as unexpanded frontier vertices so that every expanded
/// vertex has its full neighbourhood present. Edges join every pair of
/// discovered vertices that are neighbours (i < j, sorted). Loops are only
/// counted. `closed` holds iff nothing was left on the frontier, i.e. the
/// whole component was captured.
struct ExplorationGraph {
  std::vector<Triple> vertices;
  std::vector<Edge> edges;
  std::vector<int> loop_counts;
  std::vector<bool> base_flags;
  std::vector<bool> frontier;
  std::size_t seed_index = 0;
  BigInt norm_bound;
  bool closed = false;

  std::optional<std::size_t> find(const Triple& t) const;
  std::vector<std::vector<std::size_t>> adjacency() const;
  std::size_t size() const { return vertices.size(); }

 private:
  friend ExplorationGraph explore(const Triple&, const BigInt&);
  std::map<Triple, std::size_t> index_;
};

/// Breadth-first exploration from seed; neighbours are visited in canonical
/// order so vertex numbering is deterministic. Throws std::invalid_argument
/// if norm_bound < norm(seed).
ExplorationGraph explore(const Triple& seed, const BigInt& norm_bound);

/// Degree in the simple graph (loops excluded), computed from the jump
/// formula and therefore independent of the exploration bound.
int exact_degree(const ExplorationGraph& g, std::size_t v);

/// A simple cycle among g's edges, as a vertex sequence without the repeated
/// start, or nullopt when the explored graph is a forest.
std::optional<std::vector<std::size_t>> find_circuit(const ExplorationGraph& g);

/// Fingerprint separating the nine classes: component size when finite,
/// numbers of degree-1 and degree-2 vertices, and whether a circuit exists.
struct StructuralSignature {
  std::optional<std::size_t> finite_size;
  std::size_t deg1_count = 0;
  std::size_t deg2_count = 0;
  bool has_circuit = false;

  std::string to_string() const;
  friend auto operator<=>(const StructuralSignature&, const StructuralSignature&) = default;
};

/// Vertices within two jumps of the base set, ascending.
std::vector<Triple> two_hop_neighborhood(const BaseSet& bases);

/// Explores the two-hop neighbourhood of the base set (bound = its largest
/// norm) and reads the signature off it.
StructuralSignature structural_signature(const Triple& seed);

/// Throws std::logic_error for a signature outside the nine known ones.
GraphClass class_of_signature(const StructuralSignature& sig);

GraphClass structural_classify(const Triple& seed);

}  // namespace markov

#endif  // MARKOV_EXPLORER_HPP
