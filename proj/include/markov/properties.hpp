#ifndef MARKOV_PROPERTIES_HPP
#define MARKOV_PROPERTIES_HPP

#include "markov/triple.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace markov {

/// Randomized checks of the algebraic facts the classification rests on.
enum class Property { growth, sign_flip, k_invariant, neighbor_symmetry, signature_agreement };

inline constexpr std::uint64_t kDefaultRandomSeed = 1729;

struct PropertyConfig {
  std::size_t samples = 10000;
  std::uint64_t seed = kDefaultRandomSeed;
  long range = 1'000'000;      // entries drawn from [-range, range]
  std::size_t walk_length = 20;  // jumps per sample for k_invariant
};

struct PropertyResult {
  Property property;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

std::string_view name(Property p);
std::optional<Property> property_from_name(std::string_view name);
const std::vector<Property>& all_properties();

/// For 0 < |a| <= |b| < |c|: both |3bc - a| and |3ac - b| exceed |c|.
bool small_jumps_overshoot(const BigInt& a, const BigInt& b, const BigInt& c);

/// For b, c != 0 and pairwise distinct |a|, |b|, |c|: the jumps of
/// (a,-b,-c) are (a',-b,-c), (a,-b',-c), (a,-b,-c') with a', b', c' the jumped
/// entries of (a,b,c).
bool sign_flip_commutes(const BigInt& a, const BigInt& b, const BigInt& c);

/// Throws std::invalid_argument for an unusable configuration (range < 2).
PropertyResult check_property(Property p, const PropertyConfig& config);

}  // namespace markov

#endif  // MARKOV_PROPERTIES_HPP
