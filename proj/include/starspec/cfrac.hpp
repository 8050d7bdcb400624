#pragma once

#include <string>
#include <vector>

#include "starspec/ratfun.hpp"
#include "starspec/roots.hpp"

namespace starspec {

/// f(z) = a0 + 1/(-b1 z + 1/(a1 + 1/(-b2 z + ... + 1/a_p)))
struct StieltjesCF {
  std::vector<Rational> a;  // a_0 .. a_p
  std::vector<Rational> b;  // b_1 .. b_p

  int depth() const { return static_cast<int>(b.size()); }
  /// Shape and positivity of the coefficients.
  bool is_valid() const;
  friend bool operator==(const StieltjesCF&, const StieltjesCF&) = default;
};

struct S0Report {
  bool valid = false;
  bool degrees_ok = false;
  bool real_simple = false;
  bool positive = false;
  bool interlacing = false;
  bool positive_at_zero = false;
  Rational a0;
  RootList poles;
  RootList zeros;
  std::vector<std::string> issues;
};

/// Root-based diagnostic for the rational S0 class: poles and zeros positive,
/// simple, strictly interlacing with a pole first, and f(0) > 0.
S0Report validate_s0(const RationalFunction& f);

/// Throws E_NOT_S0 when a coefficient is nonpositive or the degree pattern breaks.
StieltjesCF cf_expand(const RationalFunction& f);

RationalFunction cf_to_ratfun(const StieltjesCF& c);

/// Coefficients (a_i..a_p; b_{i+1}..b_p). Throws E_RANGE for i outside [0, p].
StieltjesCF cf_tail(const StieltjesCF& c, int i);

struct PoleTerm {
  Rational pole;
  Rational residue;
};

/// f(z) = -A0 z + sum residue/(z - pole) + B
struct PartialFractions {
  Rational A0;
  std::vector<PoleTerm> terms;
  Rational B;
};

/// Exact decomposition for rational simple poles with positive residues.
/// E_IRRATIONAL_POLE for a pole outside Q, E_BAD_SHAPE otherwise.
PartialFractions partial_fractions(const RationalFunction& f);

/// numerator/factor with deg numerator < deg factor.
struct PolarPart {
  Polynomial factor;
  Polynomial numerator;
};

struct PolarDecomposition {
  Polynomial quotient;  // polynomial part of f
  std::vector<PolarPart> parts;
};

/// Splits the proper part of f over pairwise coprime factors whose product is
/// f.den() (up to a constant). Works for irrational poles as well.
PolarDecomposition polar_decomposition(const RationalFunction& f, const std::vector<Polynomial>& factors);

}  // namespace starspec
