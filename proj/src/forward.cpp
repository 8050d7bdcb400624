#include "starspec/forward.hpp"

#include "starspec/error.hpp"

namespace starspec {

std::vector<Polynomial> cauer_sequence(const Edge& e, EndFlavor flavor) {
  e.validate();
  std::vector<Polynomial> R;
  R.push_back(flavor == EndFlavor::DirichletEnd ? Polynomial::constant(1 / e.lengths[0]) : Polynomial{});
  R.push_back(Polynomial::constant(1));
  // R[i] holds R_{i-1}.
  for (int k = 1; k <= e.n(); ++k) {
    const Polynomial& r2k2 = R[static_cast<std::size_t>(2 * k - 1)];
    const Polynomial& r2k3 = R[static_cast<std::size_t>(2 * k - 2)];
    Polynomial odd = Polynomial::monomial(-e.masses[static_cast<std::size_t>(k - 1)], 1) * r2k2 + r2k3;
    Polynomial even = odd * e.lengths[static_cast<std::size_t>(k)] + r2k2;
    R.push_back(std::move(odd));
    R.push_back(std::move(even));
  }
  return R;
}

CauerPair edge_cauer_polys(const Edge& e, EndFlavor flavor) {
  std::vector<Polynomial> R = cauer_sequence(e, flavor);
  return {R[R.size() - 1], R[R.size() - 2]};
}

CenterPolys star_polys(const std::vector<Edge>& edges, const Rational& M) {
  std::vector<CauerPair> pairs;
  for (const Edge& e : edges) pairs.push_back(edge_cauer_polys(e, EndFlavor::DirichletEnd));
  const std::size_t q = pairs.size();
  CenterPolys out;
  out.phi_D = Polynomial::constant(1);
  for (const CauerPair& p : pairs) out.phi_D *= p.even;
  Rational share = q > 0 ? Rational(M / static_cast<long>(q)) : Rational(0);
  out.phi_N = Polynomial{};
  for (std::size_t j = 0; j < q; ++j) {
    Polynomial term = pairs[j].odd - Polynomial::monomial(share, 1) * pairs[j].even;
    for (std::size_t k = 0; k < q; ++k)
      if (k != j) term *= pairs[k].even;
    out.phi_N += term;
  }
  if (q == 0) out.phi_N = Polynomial::monomial(-M, 1);
  return out;
}

CenterPolys char_polys_center(const StarGraph& g) {
  if (g.root != RootPlacement::Center) throw Error(ErrorCode::InvalidArgument, "graph is not centre-rooted");
  g.validate();
  return star_polys(g.edges, g.central_mass);
}

PendantPolys char_polys_pendant(const StarGraph& g) {
  if (g.root != RootPlacement::Pendant) throw Error(ErrorCode::InvalidArgument, "graph is not pendant-rooted");
  g.validate();
  CenterPolys sub = star_polys(g.edges, g.central_mass);
  CauerPair d = edge_cauer_polys(*g.main_edge, EndFlavor::DirichletEnd);
  CauerPair n = edge_cauer_polys(*g.main_edge, EndFlavor::NeumannEnd);
  return {d.even * sub.phi_N + d.odd * sub.phi_D, n.even * sub.phi_N + n.odd * sub.phi_D};
}

Spectrum spectrum_of(const Polynomial& p) { return Spectrum::from_polynomial(p); }

SpectrumPair spectra_of(const StarGraph& g) {
  if (g.root == RootPlacement::Center) {
    CenterPolys c = char_polys_center(g);
    return {spectrum_of(c.phi_N), spectrum_of(c.phi_D)};
  }
  PendantPolys p = char_polys_pendant(g);
  return {spectrum_of(p.phi_inf), spectrum_of(p.phi_l0)};
}

RationalFunction spectral_quotient(const StarGraph& g) {
  if (g.root == RootPlacement::Center) {
    CenterPolys c = char_polys_center(g);
    return RationalFunction(c.phi_D, c.phi_N);
  }
  PendantPolys p = char_polys_pendant(g);
  return RationalFunction(p.phi_l0 * g.main_edge->lengths[0], p.phi_inf);
}

RationalFunction edge_quotient(const Edge& e) {
  CauerPair c = edge_cauer_polys(e, EndFlavor::DirichletEnd);
  return RationalFunction(c.even, c.odd);
}

LagrangeResult lagrange_check(const Edge& main) {
  std::vector<Polynomial> d = cauer_sequence(main, EndFlavor::DirichletEnd);
  std::vector<Polynomial> n = cauer_sequence(main, EndFlavor::NeumannEnd);
  Polynomial target = Polynomial::constant(-1 / main.lengths[0]);
  for (int k = 0; k <= main.n(); ++k) {
    std::size_t even = static_cast<std::size_t>(2 * k + 1), odd = static_cast<std::size_t>(2 * k);
    if (!(d[even] * n[odd] - d[odd] * n[even] == target)) return {false, k};
  }
  return {};
}

bool total_length_identity(const Edge& main) {
  Rational num = edge_cauer_polys(main, EndFlavor::DirichletEnd).even(Rational(0));
  Rational den = edge_cauer_polys(main, EndFlavor::NeumannEnd).even(Rational(0));
  return main.lengths[0] * num / den == main.total_length();
}

bool edge_cf_identity(const Edge& e) {
  StieltjesCF expected;
  for (int k = e.n(); k >= 0; --k) expected.a.push_back(e.lengths[static_cast<std::size_t>(k)]);
  for (int k = e.n(); k >= 1; --k) expected.b.push_back(e.masses[static_cast<std::size_t>(k - 1)]);
  return cf_expand(edge_quotient(e)) == expected;
}

namespace {

// -M z + sum_j 1/phi^(j)
RationalFunction admittance(const std::vector<Edge>& edges, const Rational& M) {
  RationalFunction s(Polynomial::monomial(-M, 1));
  for (const Edge& e : edges) s = s + edge_quotient(e).reciprocal();
  return s;
}

}  // namespace

bool center_quotient_identity(const StarGraph& g) {
  CenterPolys c = char_polys_center(g);
  RationalFunction lhs(c.phi_D, c.phi_N);
  RationalFunction adm = admittance(g.edges, g.central_mass);
  if (!(lhs == adm.reciprocal())) return false;
  // Factored form: phi_N = (sum odd/even - M z) phi_D, as polynomials.
  RationalFunction factored = adm * RationalFunction(c.phi_D);
  return factored.den().degree() == 0 && factored.num() == c.phi_N;
}

bool pendant_subgraph_identities(const StarGraph& g) {
  PendantPolys p = char_polys_pendant(g);
  CenterPolys sub = star_polys(g.edges, g.central_mass);
  CauerPair d = edge_cauer_polys(*g.main_edge, EndFlavor::DirichletEnd);
  CauerPair n = edge_cauer_polys(*g.main_edge, EndFlavor::NeumannEnd);
  const Rational& l0 = g.main_edge->lengths[0];
  Polynomial lhs_d = (p.phi_l0 * n.even - p.phi_inf * d.even) * l0;
  Polynomial lhs_n = (p.phi_inf * d.odd - p.phi_l0 * n.odd) * l0;
  return lhs_d == sub.phi_D && lhs_n == sub.phi_N;
}

bool branching_cf_identity(const StarGraph& g) {
  if (g.root != RootPlacement::Pendant) throw Error(ErrorCode::InvalidArgument, "graph is not pendant-rooted");
  const Edge& main = *g.main_edge;
  // Innermost level: l_n + 1/(-M z + sum 1/phi^(j)), then fold outward along the main edge.
  RationalFunction t = RationalFunction::constant(main.lengths.back()) + admittance(g.edges, g.central_mass).reciprocal();
  for (int k = main.n(); k >= 1; --k) {
    RationalFunction step = RationalFunction(Polynomial::monomial(-main.masses[static_cast<std::size_t>(k - 1)], 1)) + t.reciprocal();
    t = RationalFunction::constant(main.lengths[static_cast<std::size_t>(k - 1)]) + step.reciprocal();
  }
  return t == spectral_quotient(g);
}

MonotonicityReport neumann_monotonicity(const StarGraph& g, const std::vector<Rational>& masses, const Rational& budget) {
  MonotonicityReport rep;
  std::vector<RootList> spectra;
  for (const Rational& M : masses) {
    StarGraph h = g;
    h.central_mass = M;
    spectra.push_back(spectrum_of(char_polys_center(h).phi_N).occurrences());
  }
  for (std::size_t i = 0; i + 1 < spectra.size(); ++i) {
    if (masses[i + 1] < masses[i]) throw Error(ErrorCode::InvalidArgument, "masses must be ascending");
    const RootList& lo = spectra[i];
    const RootList& hi = spectra[i + 1];
    std::size_t n = std::min(lo.size(), hi.size());
    for (std::size_t k = 0; k < n; ++k) {
      ++rep.comparisons;
      Ordering o = compare_roots(hi[k], lo[k], budget);
      if (o == Ordering::Greater) rep.monotone = false;
      if (o == Ordering::Unresolved) {
        ++rep.unresolved;
        if (hi[k].is_exact() && lo[k].is_exact()) ++rep.unresolved_rational;
      }
    }
  }
  return rep;
}

}  // namespace starspec
