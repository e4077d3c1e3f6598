#include "markov/bigint.hpp"

#include <algorithm>
#include <cctype>

namespace markov {

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::optional<BigInt> parse_bigint(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) {
        return std::isdigit(ch) != 0;
      })) {
    return std::nullopt;
  }
  BigInt value(std::string(text), 10);
  if (negative) value = -value;
  return value;
}

}  // namespace markov
