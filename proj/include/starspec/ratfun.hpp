#pragma once

#include <string>

#include "starspec/polynomial.hpp"

namespace starspec {

/// Reduced quotient num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(const Polynomial& num, const Polynomial& den);  // normalizes
  explicit RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial::constant(1)) {}
  static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws E_DIV_ZERO at a pole.
  Rational operator()(const Rational& z) const;
  /// Limit as z -> infinity; throws E_RANGE when unbounded.
  Rational at_infinity() const;

  RationalFunction reciprocal() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

struct NormalizedRatfun {
  RationalFunction f;
  Polynomial common;  // monic gcd that was cancelled
};

/// Canonical form plus the cancelled common factor.
NormalizedRatfun ratfun_normalize(const Polynomial& num, const Polynomial& den);

std::string to_string(const RationalFunction& f);

}  // namespace starspec
