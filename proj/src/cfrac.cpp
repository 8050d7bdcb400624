#include "starspec/cfrac.hpp"

#include "starspec/error.hpp"

namespace starspec {

bool StieltjesCF::is_valid() const {
  if (a.size() != b.size() + 1) return false;
  if (sgn(a[0]) < 0) return false;
  for (std::size_t k = 1; k < a.size(); ++k)
    if (sgn(a[k]) <= 0) return false;
  for (const Rational& x : b)
    if (sgn(x) <= 0) return false;
  if (b.empty() && sgn(a[0]) <= 0) return false;
  return true;
}

S0Report validate_s0(const RationalFunction& f) {
  S0Report r;
  const Polynomial& N = f.num();
  const Polynomial& D = f.den();
  if (N.is_zero()) {
    r.issues.push_back("function is identically zero");
    return r;
  }
  int dn = N.degree(), dd = D.degree();
  r.degrees_ok = dn == dd || dn == dd - 1;
  if (!r.degrees_ok) r.issues.push_back("numerator degree must equal the denominator degree or be one less");
  if (dn <= dd) r.a0 = f.at_infinity();

  RootList all_poles = isolate_real_roots(D, Domain::real_line());
  RootList all_zeros = isolate_real_roots(N, Domain::real_line());
  int pole_count = 0, zero_count = 0;
  r.real_simple = true;
  r.positive = true;
  for (const RootList* list : {&all_poles, &all_zeros}) {
    for (const RealRoot& x : *list) {
      (list == &all_poles ? pole_count : zero_count) += x.multiplicity;
      if (x.multiplicity > 1) {
        r.real_simple = false;
        r.issues.push_back(list == &all_poles ? "multiple pole" : "multiple zero");
      }
      if (compare_root_value(x, 0, Rational(0)) != Ordering::Greater) {
        r.positive = false;
        r.issues.push_back(list == &all_poles ? "nonpositive pole" : "nonpositive zero");
      }
    }
  }
  if (pole_count != dd || zero_count != dn) {
    r.real_simple = false;
    r.issues.push_back("non-real poles or zeros");
  }
  r.poles = all_poles;
  r.zeros = all_zeros;

  // Merge check: alpha_1 < beta_1 < alpha_2 < beta_2 < ...
  r.interlacing = r.degrees_ok && r.real_simple;
  if (r.interlacing) {
    for (std::size_t k = 0; k < all_zeros.size(); ++k) {
      if (compare_roots(all_poles[k], all_zeros[k], Rational(0)) != Ordering::Less ||
          (k + 1 < all_poles.size() &&
           compare_roots(all_zeros[k], all_poles[k + 1], Rational(0)) != Ordering::Less)) {
        r.interlacing = false;
        r.issues.push_back("poles and zeros do not interlace with a pole first");
        break;
      }
    }
  }
  if (sgn(D.coeff(0)) != 0) {
    r.positive_at_zero = sgn(f(Rational(0))) > 0;
  }
  if (!r.positive_at_zero) r.issues.push_back("value at zero is not positive");
  r.valid = r.degrees_ok && r.real_simple && r.positive && r.interlacing && r.positive_at_zero;
  return r;
}

StieltjesCF cf_expand(const RationalFunction& f) {
  StieltjesCF c;
  Polynomial N = f.num(), D = f.den();
  if (N.is_zero()) throw Error(ErrorCode::NotS0, "zero function has no Stieltjes expansion");
  while (true) {
    Rational a;
    if (N.degree() > D.degree())
      throw Error(ErrorCode::NotS0, "numerator degree exceeds denominator degree at level " + std::to_string(c.a.size()));
    if (N.degree() == D.degree()) a = N.leading() / D.leading();
    if (c.a.empty() ? sgn(a) < 0 : sgn(a) <= 0)
      throw Error(ErrorCode::NotS0, "nonpositive coefficient a_" + std::to_string(c.a.size()) + " = " + to_string(a));
    c.a.push_back(a);
    Polynomial N1 = N - D * a;
    if (N1.is_zero()) break;
    if (D.degree() != N1.degree() + 1)
      throw Error(ErrorCode::NotS0, "degree pattern broken at level " + std::to_string(c.b.size() + 1));
    Rational b = -D.leading() / N1.leading();
    if (sgn(b) <= 0)
      throw Error(ErrorCode::NotS0, "nonpositive coefficient b_" + std::to_string(c.b.size() + 1) + " = " + to_string(b));
    c.b.push_back(b);
    Polynomial G = D + Polynomial::monomial(b, 1) * N1;
    if (G.degree() != N1.degree())
      throw Error(ErrorCode::NotS0, "degree pattern broken after b_" + std::to_string(c.b.size()));
    N = std::move(N1);
    D = std::move(G);
  }
  if (c.b.empty() && sgn(c.a[0]) <= 0) throw Error(ErrorCode::NotS0, "constant function must be positive");
  return c;
}

RationalFunction cf_to_ratfun(const StieltjesCF& c) {
  if (c.a.size() != c.b.size() + 1) throw Error(ErrorCode::InvalidArgument, "continued fraction shape: |a| must be |b| + 1");
  Polynomial N = Polynomial::constant(c.a.back()), D = Polynomial::constant(1);
  for (std::size_t k = c.b.size(); k-- > 0;) {
    // a_k + 1/(-b z + D/N) = a_k + N/(-b z N + D)
    Polynomial den = D - Polynomial::monomial(c.b[k], 1) * N;
    Polynomial num = den * c.a[k] + N;
    N = std::move(num);
    D = std::move(den);
  }
  return RationalFunction(N, D);
}

StieltjesCF cf_tail(const StieltjesCF& c, int i) {
  if (i < 0 || i > c.depth()) throw Error(ErrorCode::Range, "tail index " + std::to_string(i) + " out of range");
  StieltjesCF t;
  t.a.assign(c.a.begin() + i, c.a.end());
  t.b.assign(c.b.begin() + i, c.b.end());
  return t;
}

PartialFractions partial_fractions(const RationalFunction& f) {
  DivRem dr = divrem(f.num(), f.den());
  if (dr.quotient.degree() > 1) throw Error(ErrorCode::BadShape, "polynomial part of degree above one");
  PartialFractions pf;
  pf.A0 = -dr.quotient.coeff(1);
  pf.B = dr.quotient.coeff(0);
  if (sgn(pf.A0) < 0) throw Error(ErrorCode::BadShape, "coefficient of -z is negative");
  const Polynomial& D = f.den();
  if (D.degree() <= 0) return pf;
  RootList poles = isolate_real_roots(D, Domain::real_line());
  int total = 0;
  for (const RealRoot& p : poles) total += p.multiplicity;
  if (total != D.degree()) throw Error(ErrorCode::BadShape, "non-real poles");
  Polynomial dD = D.derivative();
  for (const RealRoot& p : poles) {
    if (p.multiplicity > 1) throw Error(ErrorCode::BadShape, "multiple pole");
    if (!p.is_exact()) throw Error(ErrorCode::IrrationalPole, "pole is not rational");
    const Rational& z = p.value();
    if (sgn(z) <= 0) throw Error(ErrorCode::BadShape, "nonpositive pole " + to_string(z));
    Rational res = dr.remainder(z) / dD(z);
    if (sgn(res) <= 0) throw Error(ErrorCode::BadShape, "nonpositive residue at " + to_string(z));
    pf.terms.push_back({z, res});
  }
  return pf;
}

PolarDecomposition polar_decomposition(const RationalFunction& f, const std::vector<Polynomial>& factors) {
  DivRem dr = divrem(f.num(), f.den());
  PolarDecomposition out;
  out.quotient = dr.quotient;
  Polynomial prod = Polynomial::constant(1);
  for (const Polynomial& g : factors) prod *= g;
  if (!(prod.monic() == f.den())) throw Error(ErrorCode::InvalidArgument, "factors do not multiply to the denominator");
  for (const Polynomial& g : factors) {
    Polynomial h = exact_div(f.den(), g.monic());
    ExtendedGcd eg = extended_gcd(h, g.monic());
    if (eg.g.degree() != 0) throw Error(ErrorCode::InvalidArgument, "factors are not coprime");
    // R/(h g) has polar part (R * h^-1 mod g)/g.
    Polynomial p = divrem(dr.remainder * eg.s, g.monic()).remainder;
    out.parts.push_back({g.monic(), p});
  }
  return out;
}

}  // namespace starspec
