#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace starspec {

/// Exact rational scalar. GMP keeps every arithmetic result canonical
/// (positive denominator, coprime parts).
using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts "p/q", "-7", "0.5", "-1.25", "+3". Decimals become exact fractions.
Rational parse_rational(std::string_view text);

/// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Correctly rounded decimal with `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits);

/// Decimal approximation of sqrt(q) for q >= 0, `digits` fractional digits.
std::string sqrt_decimal(const Rational& q, int digits);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace starspec
