#include "starspec/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "starspec/error.hpp"

namespace starspec {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (sgn(c) == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::z() { return monomial(1, 1); }

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial p = constant(1);
  for (const Rational& r : roots) p *= Polynomial{Rational(-r), Rational(1)};
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

int Polynomial::sign_at(const Rational& z) const {
  if (is_zero()) return 0;
  // Homogeneous Horner over integers: sign of den^d * p(num/den) equals sign of p(z).
  const Integer& a = z.get_num();
  const Integer& b = z.get_den();
  Integer common = 1;
  for (const Rational& c : coeffs_) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den().get_mpz_t());
  Integer acc = 0, bpow = 1;
  // Evaluate sum c_i a^i b^(d-i) from the top: acc = acc*a + c_i*b^(d-i).
  std::vector<Integer> ints(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) ints[i] = coeffs_[i].get_num() * (common / coeffs_[i].get_den());
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * a + ints[k] * bpow;
    bpow *= b;
  }
  return sgn(acc);
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  Integer l = 1, g = 0;
  for (const Rational& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Integer v = coeffs_[i].get_num() * (l / coeffs_[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out[i] = Rational(v);
  }
  for (Rational& c : out) c /= g;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Rational& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& x : coeffs_) x *= c;
  return *this;
}

DivRem divrem(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivZero, "division by the zero polynomial");
  std::vector<Rational> rem = p.coefficients();
  int dq = q.degree();
  int dp = p.degree();
  if (dp < dq) return {Polynomial{}, p};
  std::vector<Rational> quot(static_cast<std::size_t>(dp - dq) + 1);
  const Rational& lq = q.leading();
  const auto& qc = q.coefficients();
  for (int k = dp - dq; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + dq)] / lq;
    quot[static_cast<std::size_t>(k)] = c;
    if (sgn(c) == 0) continue;
    for (int i = 0; i <= dq; ++i) rem[static_cast<std::size_t>(k + i)] -= c * qc[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(dq));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  DivRem dr = divrem(p, q);
  if (!dr.remainder.is_zero()) throw Error(ErrorCode::Invariant, "polynomial division is not exact");
  return dr.quotient;
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::DivZero, "gcd of two zero polynomials");
  // Primitive remainder sequence keeps coefficient growth in check.
  Polynomial a = p.primitive(), b = q.primitive();
  while (!b.is_zero()) {
    Polynomial r = divrem(a, b).remainder.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::DivZero, "gcd of two zero polynomials");
  Polynomial r0 = p, r1 = q;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    DivRem dr = divrem(r0, r1);
    Polynomial s2 = s0 - dr.quotient * s1;
    Polynomial t2 = t0 - dr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(dr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<SquareFreeFactor> squarefree_factor(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "square-free factorization of zero");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;
  Polynomial f = p.monic();
  Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = exact_div(f, a);
  Polynomial c = exact_div(df, a);
  Polynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "square-free part of zero");
  if (p.degree() <= 0) return Polynomial::constant(1);
  return exact_div(p, gcd(p, p.derivative())).monic();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = mag == 1;
    if (i == 0)
      os << to_string(mag);
    else {
      if (!unit) os << to_string(mag) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace starspec
