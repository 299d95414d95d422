#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hermite {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "p", "p/q" and plain decimal literals such as "-0.096", which are
// converted to the exact fraction they denote.
std::optional<Rational> parse_rational(std::string_view text);

Rational rational_pow(const Rational& base, unsigned exp);

// Decimal rendering with the given number of significant digits, round to
// nearest.  Display only; never used in computations.
std::string to_decimal_string(const Rational& r, unsigned significant_digits);

}  // namespace hermite
