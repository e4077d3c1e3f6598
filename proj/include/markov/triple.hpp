#ifndef MARKOV_TRIPLE_HPP
#define MARKOV_TRIPLE_HPP

#include "markov/bigint.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace markov {

/// Index of an entry of a canonical triple. A jump at a position replaces
/// that entry; a two-sign flip keeps it.
enum class Position : std::uint8_t { first = 0, second = 1, third = 2 };

inline constexpr std::array<Position, 3> kPositions = {Position::first, Position::second,
                                                       Position::third};

constexpr std::size_t index_of(Position p) { return static_cast<std::size_t>(p); }

/// Unordered triple of integers, stored ascending by value. Two triples are
/// equal iff they are equal as multisets, and the lexicographic order on the
/// sorted entries is the canonical total order used for every container.
class Triple {
 public:
  Triple() = default;
  Triple(BigInt a, BigInt b, BigInt c);
  Triple(long a, long b, long c) : Triple(BigInt(a), BigInt(b), BigInt(c)) {}

  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  const BigInt& operator[](Position p) const { return entries_[index_of(p)]; }
  const std::array<BigInt, 3>& entries() const { return entries_; }

  /// "(a,b,c)" in canonical order.
  std::string to_string() const;

  friend bool operator==(const Triple& lhs, const Triple& rhs);
  friend std::strong_ordering operator<=>(const Triple& lhs, const Triple& rhs);

 private:
  std::array<BigInt, 3> entries_{};
};

Triple canonicalize(BigInt a, BigInt b, BigInt c);

/// |a| + |b| + |c|.
BigInt norm(const Triple& t);

/// 3 * (product of the other two entries) - (entry at p). Not canonicalized.
BigInt jumped_entry(const Triple& t, Position p);

/// The Vieta jump at p: the entry is replaced by jumped_entry and the result
/// is canonicalized. Jumping the produced entry again restores t.
Triple jump(const Triple& t, Position p);

/// Simple-graph neighbourhood of a vertex. `vertices` holds the distinct
/// jump results other than t itself, ascending; `loops` counts positions
/// whose jump returns t.
struct Neighborhood {
  std::vector<Triple> vertices;
  int loops = 0;
};

Neighborhood neighbors(const Triple& t);

/// a^2 + b^2 + c^2 - 3abc; constant along jumps.
BigInt k_invariant(const Triple& t);

/// Negates the two entries other than the one at `kept`.
Triple flip_two_signs(const Triple& t, Position kept);

}  // namespace markov

#endif  // MARKOV_TRIPLE_HPP
