#pragma once

#include <optional>
#include <vector>

#include "starspec/polynomial.hpp"

namespace starspec {

/// Open interval (lo, hi); a missing bound means infinity on that side.
struct Domain {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static Domain positive() { return {Rational(0), std::nullopt}; }
  static Domain real_line() { return {std::nullopt, std::nullopt}; }
};

/// A real algebraic number: the unique root of `witness` (square-free) in the
/// open interval (lo, hi), or the exact rational lo when lo == hi.
/// Interval endpoints are never roots of the witness.
struct RealRoot {
  Polynomial witness;
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  const Rational& value() const;  // requires is_exact()
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

using RootList = std::vector<RealRoot>;

/// Sturm sequence of a square-free polynomial, with positive content scaling.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree);
  /// Number of distinct roots in the open interval (a, b); a missing bound is infinite.
  int count(const std::optional<Rational>& a, const std::optional<Rational>& b) const;
  const Polynomial& base() const { return chain_.front(); }

 private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;

  std::vector<Polynomial> chain_;
};

/// All real roots of p in the domain, sorted ascending, with exact multiplicities.
/// Rational roots come back exact; irrational ones as isolating intervals.
RootList isolate_real_roots(const Polynomial& p, const Domain& domain = Domain::positive());

/// Bisect the root until its interval is no wider than `width` or it becomes exact.
/// The input interval must isolate a root of the square-free part of p.
RealRoot refine_root(const Polynomial& p, RealRoot root, const Rational& width);

/// One bisection step on a root whose witness is already square-free.
void bisect_once(RealRoot& root);

enum class Ordering { Less, Equal, Greater, Unresolved };

/// Exact comparison. Equality of two algebraic roots is decided through the gcd of
/// their witnesses; distinct roots are separated by refinement down to `budget`.
Ordering compare_roots(RealRoot a, RealRoot b, const Rational& budget);
Ordering compare_root_value(RealRoot a, const Rational& v, const Rational& budget);

/// True iff q vanishes at the root.
bool vanishes_at(const Polynomial& q, const RealRoot& root);

/// Order of vanishing of q at the root (0 when q does not vanish there).
int multiplicity_at(const Polynomial& q, const RealRoot& root);

/// Default separation budget 2^-64.
Rational default_budget();

}  // namespace starspec
