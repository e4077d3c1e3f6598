#include "markov/classifier.hpp"

#include <stdexcept>
#include <string>

namespace markov {

GraphClass class_from_id(int id) {
  if (id < 1 || id > 9) throw std::out_of_range("graph class id out of range: " + std::to_string(id));
  return static_cast<GraphClass>(id);
}

std::string_view describe(GraphClass c) {
  switch (c) {
    case GraphClass::origin: return "base (0,0,0)";
    case GraphClass::zero_pair: return "bases (0,0,a), (0,0,-a)";
    case GraphClass::zero_square: return "bases (0,+-a,+-b) on a circuit";
    case GraphClass::zero_twin: return "bases (0,a,a), (0,a,-a), (0,-a,-a)";
    case GraphClass::all_equal: return "base (a,a,a)";
    case GraphClass::twin: return "base (a,a,b)";
    case GraphClass::twin_loop: return "base (a,a,3a^2/2)";
    case GraphClass::distinct_loop: return "base (n,2m,3nm)";
    case GraphClass::regular_tree: return "base (a,b,c)";
  }
  return "unknown";
}

GraphClass classify_base(const Triple& base) {
  if (!is_base(base)) {
    throw std::invalid_argument("classify_base: " + base.to_string() + " is not a base");
  }
  const auto& e = base.entries();
  int zeros = 0;
  for (const BigInt& x : e) zeros += (sgn(x) == 0);

  if (zeros == 3) return GraphClass::origin;
  if (zeros == 2) return GraphClass::zero_pair;
  if (zeros == 1) {
    // canonical order puts the zero between negatives and positives
    const BigInt& x = sgn(e[0]) == 0 ? e[1] : e[0];
    const BigInt& y = sgn(e[2]) == 0 ? e[1] : e[2];
    return abs(x) == abs(y) ? GraphClass::zero_twin : GraphClass::zero_square;
  }

  if (e[0] == e[2]) return GraphClass::all_equal;
  if (e[0] == e[1] || e[1] == e[2]) {
    const BigInt& twin = e[1];
    const BigInt& other = e[0] == e[1] ? e[2] : e[0];
    return 2 * other == 3 * twin * twin ? GraphClass::twin_loop : GraphClass::twin;
  }
  for (Position p : kPositions) {
    if (jumped_entry(base, p) == base[p]) return GraphClass::distinct_loop;
  }
  return GraphClass::regular_tree;
}

Classification classify(const Triple& seed) {
  DescentTrace trace = descend(seed);
  BaseSet bases = enumerate_bases(seed);
  const GraphClass cls = classify_base(bases.bases.front());
  for (const Triple& b : bases.bases) {
    if (classify_base(b) != cls) {
      throw std::logic_error("bases " + bases.bases.front().to_string() + " and " +
                             b.to_string() + " classify differently");
    }
  }
  BigInt k = k_invariant(seed);
  return Classification{cls, std::move(bases), std::move(k), std::move(trace)};
}

}  // namespace markov
