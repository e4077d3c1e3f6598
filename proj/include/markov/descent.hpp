#ifndef MARKOV_DESCENT_HPP
#define MARKOV_DESCENT_HPP

#include "markov/triple.hpp"

#include <vector>

namespace markov {

/// True iff no single jump strictly lowers the norm of t.
bool is_base(const Triple& t);

/// Seed-to-base path. Consecutive entries are neighbours and the norm
/// strictly decreases; the last entry is a base.
struct DescentTrace {
  std::vector<Triple> path;

  const Triple& seed() const { return path.front(); }
  const Triple& terminal() const { return path.back(); }
  std::size_t steps() const { return path.size() - 1; }
};

/// Greedy norm descent. Each step takes the jump with the smallest resulting
/// norm, ties broken by canonical order of the result; stops at the first
/// local minimum.
DescentTrace descend(const Triple& seed);

/// All minimum-norm vertices of a component, ascending. Bases of one
/// component are connected through each other: a pair, a path of three, a
/// four-cycle, or a single vertex.
struct BaseSet {
  std::vector<Triple> bases;
  BigInt norm;

  bool contains(const Triple& t) const;
  friend bool operator==(const BaseSet&, const BaseSet&) = default;
};

BaseSet enumerate_bases(const Triple& seed);

}  // namespace markov

#endif  // MARKOV_DESCENT_HPP
