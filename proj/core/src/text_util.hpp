#ifndef LIETWIST_SRC_TEXT_UTIL_HPP
#define LIETWIST_SRC_TEXT_UTIL_HPP

#include <string>
#include <utility>
#include <vector>

#include "lietwist/rational.hpp"

namespace lietwist::detail {

// "base" styled variable power, 1-based index: power_str("d", 0, 2) -> "d1^2".
inline std::string power_str(const char* base, int var0, int exp) {
  std::string s = base + std::to_string(var0 + 1);
  if (exp != 1) s += "^" + std::to_string(exp);
  return s;
}

// Joins (coefficient, monomial-string) terms as "a + b - c"; the sign of the
// coefficient is absorbed into the joiner. Empty input renders "0".
inline std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    std::string piece;
    if (mono.empty()) {
      piece = mag.str();
    } else if (mag.is_one()) {
      piece = mono;
    } else {
      piece = mag.str() + " * " + mono;
    }
    if (first) {
      out = (neg ? "-" : "") + piece;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace lietwist::detail

#endif  // LIETWIST_SRC_TEXT_UTIL_HPP
