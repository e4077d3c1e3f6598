#ifndef MARKOV_BIGINT_HPP
#define MARKOV_BIGINT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace markov {

/// Arbitrary-precision signed integer used for every triple entry.
using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Parses an optionally signed decimal integer ("-12", "+7", "0").
/// Anything else (whitespace, hex, empty) yields nullopt.
std::optional<BigInt> parse_bigint(std::string_view text);

}  // namespace markov

#endif  // MARKOV_BIGINT_HPP
