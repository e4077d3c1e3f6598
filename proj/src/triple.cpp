#include "markov/triple.hpp"

#include <algorithm>
#include <utility>

namespace markov {

Triple::Triple(BigInt a, BigInt b, BigInt c)
    : entries_{std::move(a), std::move(b), std::move(c)} {
  std::sort(entries_.begin(), entries_.end());
}

std::string Triple::to_string() const {
  return "(" + markov::to_string(entries_[0]) + "," + markov::to_string(entries_[1]) + "," +
         markov::to_string(entries_[2]) + ")";
}

bool operator==(const Triple& lhs, const Triple& rhs) {
  return lhs.entries_[0] == rhs.entries_[0] && lhs.entries_[1] == rhs.entries_[1] &&
         lhs.entries_[2] == rhs.entries_[2];
}

std::strong_ordering operator<=>(const Triple& lhs, const Triple& rhs) {
  for (std::size_t i = 0; i < 3; ++i) {
    const int c = cmp(lhs.entries_[i], rhs.entries_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Triple canonicalize(BigInt a, BigInt b, BigInt c) {
  return Triple(std::move(a), std::move(b), std::move(c));
}

BigInt norm(const Triple& t) { return abs(t[0]) + abs(t[1]) + abs(t[2]); }

BigInt jumped_entry(const Triple& t, Position p) {
  const std::size_t i = index_of(p);
  const BigInt& x = t[(i + 1) % 3];
  const BigInt& y = t[(i + 2) % 3];
  return BigInt(3 * x * y - t[i]);
}

Triple jump(const Triple& t, Position p) {
  std::array<BigInt, 3> e = t.entries();
  e[index_of(p)] = jumped_entry(t, p);
  return Triple(std::move(e[0]), std::move(e[1]), std::move(e[2]));
}

Neighborhood neighbors(const Triple& t) {
  Neighborhood out;
  for (Position p : kPositions) {
    Triple u = jump(t, p);
    if (u == t) {
      ++out.loops;
    } else if (std::find(out.vertices.begin(), out.vertices.end(), u) == out.vertices.end()) {
      out.vertices.push_back(std::move(u));
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

BigInt k_invariant(const Triple& t) {
  const BigInt& a = t[0];
  const BigInt& b = t[1];
  const BigInt& c = t[2];
  return BigInt(a * a + b * b + c * c - 3 * a * b * c);
}

Triple flip_two_signs(const Triple& t, Position kept) {
  std::array<BigInt, 3> e = t.entries();
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != index_of(kept)) e[i] = -e[i];
  }
  return Triple(std::move(e[0]), std::move(e[1]), std::move(e[2]));
}

}  // namespace markov
