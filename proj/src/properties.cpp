#include "markov/properties.hpp"

#include "markov/classifier.hpp"
#include "markov/explorer.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace markov {

namespace {

class Sampler {
 public:
  Sampler(std::uint64_t seed, long range) : rng_(seed), dist_(-range, range) {}

  long any() { return dist_(rng_); }
  long nonzero() {
    long v = 0;
    while (v == 0) v = dist_(rng_);
    return v;
  }
  Position position() { return kPositions[std::uniform_int_distribution<int>(0, 2)(rng_)]; }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> dist_;
};

std::string ordered(const BigInt& a, const BigInt& b, const BigInt& c) {
  return "(" + to_string(a) + "," + to_string(b) + "," + to_string(c) + ")";
}

PropertyResult run_growth(const PropertyConfig& cfg, Sampler& s) {
  PropertyResult r{Property::growth, 0, std::nullopt};
  while (r.checked < cfg.samples) {
    std::array<long, 3> e{s.nonzero(), s.nonzero(), s.nonzero()};
    std::sort(e.begin(), e.end(), [](long x, long y) { return std::abs(x) < std::abs(y); });
    if (std::abs(e[1]) == std::abs(e[2])) continue;
    ++r.checked;
    if (!small_jumps_overshoot(e[0], e[1], e[2])) {
      r.counterexample = ordered(e[0], e[1], e[2]);
      break;
    }
  }
  return r;
}

PropertyResult run_sign_flip(const PropertyConfig& cfg, Sampler& s) {
  PropertyResult r{Property::sign_flip, 0, std::nullopt};
  while (r.checked < cfg.samples) {
    const long a = s.any();
    const long b = s.nonzero();
    const long c = s.nonzero();
    if (std::abs(a) == std::abs(b) || std::abs(b) == std::abs(c) || std::abs(a) == std::abs(c)) {
      continue;
    }
    ++r.checked;
    if (!sign_flip_commutes(a, b, c)) {
      r.counterexample = ordered(a, b, c);
      break;
    }
  }
  return r;
}

PropertyResult run_k_invariant(const PropertyConfig& cfg, Sampler& s) {
  PropertyResult r{Property::k_invariant, 0, std::nullopt};
  for (; r.checked < cfg.samples; ++r.checked) {
    Triple t(s.any(), s.any(), s.any());
    const BigInt k = k_invariant(t);
    for (std::size_t step = 0; step < cfg.walk_length; ++step) {
      const Position p = s.position();
      Triple next = jump(t, p);
      if (k_invariant(next) != k) {
        r.counterexample = t.to_string() + " jump at " + std::to_string(index_of(p));
        ++r.checked;
        return r;
      }
      t = std::move(next);
    }
  }
  return r;
}

PropertyResult run_neighbor_symmetry(const PropertyConfig& cfg, Sampler& s) {
  PropertyResult r{Property::neighbor_symmetry, 0, std::nullopt};
  for (; r.checked < cfg.samples; ++r.checked) {
    const Triple t(s.any(), s.any(), s.any());
    for (const Triple& u : neighbors(t).vertices) {
      const auto back = neighbors(u).vertices;
      if (!std::binary_search(back.begin(), back.end(), t)) {
        r.counterexample = t.to_string() + " -> " + u.to_string();
        ++r.checked;
        return r;
      }
    }
  }
  return r;
}

PropertyResult run_signature_agreement(const PropertyConfig& cfg, Sampler& s) {
  PropertyResult r{Property::signature_agreement, 0, std::nullopt};
  for (; r.checked < cfg.samples; ++r.checked) {
    const Triple t(s.any(), s.any(), s.any());
    std::string detail;
    try {
      const int decided = class_id(classify(t).graph_class);
      const int structural = class_id(structural_classify(t));
      if (decided == structural) continue;
      detail = " classify " + std::to_string(decided) + " structural " + std::to_string(structural);
    } catch (const std::logic_error& e) {
      detail = std::string(" ") + e.what();
    }
    r.counterexample = t.to_string() + detail;
    ++r.checked;
    return r;
  }
  return r;
}

}  // namespace

std::string_view name(Property p) {
  switch (p) {
    case Property::growth: return "lemma1";
    case Property::sign_flip: return "lemma2";
    case Property::k_invariant: return "k-invariant";
    case Property::neighbor_symmetry: return "neighbor-symmetry";
    case Property::signature_agreement: return "signature-agreement";
  }
  return "unknown";
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> all{Property::growth, Property::sign_flip, Property::k_invariant,
                                         Property::neighbor_symmetry,
                                         Property::signature_agreement};
  return all;
}

std::optional<Property> property_from_name(std::string_view text) {
  for (Property p : all_properties()) {
    if (name(p) == text) return p;
  }
  return std::nullopt;
}

bool small_jumps_overshoot(const BigInt& a, const BigInt& b, const BigInt& c) {
  const BigInt a_jump = 3 * b * c - a;
  const BigInt b_jump = 3 * a * c - b;
  return abs(a_jump) > abs(c) && abs(b_jump) > abs(c);
}

bool sign_flip_commutes(const BigInt& a, const BigInt& b, const BigInt& c) {
  const BigInt a_jump = 3 * b * c - a;
  const BigInt b_jump = 3 * a * c - b;
  const BigInt c_jump = 3 * a * b - c;
  const Triple original(a, b, c);
  const Triple flipped(a, -b, -c);

  // the kept entry a is the only entry of its absolute value
  std::size_t kept = 0;
  while (original[kept] != a) ++kept;
  if (flip_two_signs(original, kPositions[kept]) != flipped) return false;

  const std::array<Triple, 3> expected{Triple(a_jump, -b, -c), Triple(a, -b_jump, -c),
                                       Triple(a, -b, -c_jump)};
  std::vector<Triple> expected_vertices;
  int expected_loops = 0;
  for (const Triple& t : expected) {
    if (t == flipped) {
      ++expected_loops;
    } else if (std::find(expected_vertices.begin(), expected_vertices.end(), t) ==
               expected_vertices.end()) {
      expected_vertices.push_back(t);
    }
  }
  std::sort(expected_vertices.begin(), expected_vertices.end());

  const Neighborhood actual = neighbors(flipped);
  return actual.vertices == expected_vertices && actual.loops == expected_loops;
}

PropertyResult check_property(Property p, const PropertyConfig& config) {
  if (config.range < 2) throw std::invalid_argument("property range must be at least 2");
  Sampler s(config.seed, config.range);
  switch (p) {
    case Property::growth: return run_growth(config, s);
    case Property::sign_flip: return run_sign_flip(config, s);
    case Property::k_invariant: return run_k_invariant(config, s);
    case Property::neighbor_symmetry: return run_neighbor_symmetry(config, s);
    case Property::signature_agreement: return run_signature_agreement(config, s);
  }
  throw std::invalid_argument("unknown property");
}

}  // namespace markov
