#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "starspec/rational.hpp"

namespace starspec {

/// Dense univariate polynomial over the rationals in the variable z.
/// Coefficients are stored lowest degree first; the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  /// The polynomial z.
  static Polynomial z();
  /// Product of (z - r) over the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of z^i; zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& z) const;
  /// Sign of the value at z without forming the full rational value.
  int sign_at(const Rational& z) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Positive rational multiple with coprime integer coefficients.
  Polynomial primitive() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws E_DIV_ZERO when q is the zero polynomial.
DivRem divrem(const Polynomial& p, const Polynomial& q);

/// Exact quotient p / q; throws E_INVARIANT when the remainder is nonzero.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);

/// Monic greatest common divisor. gcd(p, 0) = monic(p); both zero is an error.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Bezout data: s*p + t*q = g with g = gcd(p, q) monic.
struct ExtendedGcd {
  Polynomial g;
  Polynomial s;
  Polynomial t;
};
ExtendedGcd extended_gcd(const Polynomial& p, const Polynomial& q);

struct SquareFreeFactor {
  Polynomial factor;  // monic, square-free
  int multiplicity;
};

/// Yun's square-free decomposition. The product of factor^multiplicity equals
/// monic(p); factors are pairwise coprime and listed by increasing multiplicity.
std::vector<SquareFreeFactor> squarefree_factor(const Polynomial& p);

/// Monic product of the distinct irreducible factors of p.
Polynomial squarefree_part(const Polynomial& p);

/// Human-readable form, highest degree first, e.g. "z^2 - 3*z + 2".
std::string to_string(const Polynomial& p);

}  // namespace starspec
