#include "starspec/ratfun.hpp"

#include "starspec/error.hpp"

namespace starspec {

NormalizedRatfun ratfun_normalize(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivZero, "rational function with zero denominator");
  if (num.is_zero()) return {RationalFunction(), den.monic()};
  Polynomial g = gcd(num, den);
  return {RationalFunction(exact_div(num, g), exact_div(den, g)), g};
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivZero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial::constant(1);
    return;
  }
  if (den.degree() == 0) {
    num_ = num * Rational(1 / den.leading());
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = gcd(num, den);
  Polynomial n = g.degree() > 0 ? exact_div(num, g) : num;
  Polynomial d = g.degree() > 0 ? exact_div(den, g) : den;
  Rational inv = 1 / d.leading();
  num_ = n * inv;
  den_ = d * inv;
}

Rational RationalFunction::operator()(const Rational& z) const {
  Rational d = den_(z);
  if (sgn(d) == 0) throw Error(ErrorCode::DivZero, "evaluation at a pole");
  return num_(z) / d;
}

Rational RationalFunction::at_infinity() const {
  if (num_.is_zero() || num_.degree() < den_.degree()) return 0;
  if (num_.degree() > den_.degree()) throw Error(ErrorCode::Range, "unbounded at infinity");
  return num_.leading() / den_.leading();
}

RationalFunction RationalFunction::reciprocal() const {
  if (num_.is_zero()) throw Error(ErrorCode::DivZero, "reciprocal of zero");
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw Error(ErrorCode::DivZero, "division by the zero function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RationalFunction& f) {
  if (f.den().degree() == 0) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace starspec
