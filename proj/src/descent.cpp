#include "markov/descent.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

namespace markov {

namespace {

// Best strictly norm-reducing jump, if any.
std::optional<Triple> best_reducing_jump(const Triple& t) {
  const BigInt current = norm(t);
  std::optional<Triple> best;
  BigInt best_norm;
  for (Position p : kPositions) {
    Triple u = jump(t, p);
    BigInt n = norm(u);
    if (n >= current) continue;
    if (!best || n < best_norm || (n == best_norm && u < *best)) {
      best = std::move(u);
      best_norm = std::move(n);
    }
  }
  return best;
}

}  // namespace

bool is_base(const Triple& t) {
  const BigInt current = norm(t);
  return std::all_of(kPositions.begin(), kPositions.end(),
                     [&](Position p) { return norm(jump(t, p)) >= current; });
}

DescentTrace descend(const Triple& seed) {
  DescentTrace trace;
  trace.path.push_back(seed);
  while (auto next = best_reducing_jump(trace.path.back())) {
    trace.path.push_back(std::move(*next));
  }
  return trace;
}

bool BaseSet::contains(const Triple& t) const {
  return std::binary_search(bases.begin(), bases.end(), t);
}

BaseSet enumerate_bases(const Triple& seed) {
  const Triple start = descend(seed).terminal();
  const BigInt level = norm(start);

  std::set<Triple> found{start};
  std::deque<Triple> queue{start};
  while (!queue.empty()) {
    const Triple v = std::move(queue.front());
    queue.pop_front();
    for (const Triple& u : neighbors(v).vertices) {
      if (found.contains(u) || norm(u) != level || !is_base(u)) continue;
      found.insert(u);
      queue.push_back(u);
    }
  }
  return BaseSet{{found.begin(), found.end()}, level};
}

}  // namespace markov
