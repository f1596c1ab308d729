// Exact rational numbers used throughout the library.
//
// All rates, prices, bounds, energies and durations are exact rationals.
// Region boundaries and the order on energy functions are decided by exact
// comparisons, so no floating point value ever enters the algebra.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace rtea {

/// Arbitrary-precision rational, always kept in canonical form
/// (gcd(|num|, den) = 1, den > 0).
using Rational = mpq_class;

/// Parses "-20", "2.5", "5/2" (optionally signed). Returns nullopt on
/// malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text form: "5", "-1/2". Integers carry no denominator.
std::string to_string(const Rational& value);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

}  // namespace rtea
