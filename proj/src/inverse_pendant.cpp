#include "starspec/inverse_pendant.hpp"

#include "starspec/error.hpp"

namespace starspec {

namespace {

RationalFunction unit_at_zero(const Polynomial& p) { return RationalFunction(p, Polynomial::constant(p(Rational(0)))); }

void check_lengths(const PendantInverseInput& in) {
  if (sgn(in.main_length) <= 0) throw Error(ErrorCode::Invariant, "main length must be positive");
  if (in.lengths.empty()) throw Error(ErrorCode::Invariant, "a pendant-rooted star needs at least one non-main edge");
  for (const Rational& l : in.lengths)
    if (sgn(l) <= 0) throw Error(ErrorCode::Invariant, "edge lengths must be positive");
}

}  // namespace

PhiData build_phi(const PendantInverseInput& in) {
  check_lengths(in);
  Rational s = 0;
  for (const Rational& l : in.lengths) s += 1 / l;
  PhiData out;
  out.gamma = in.main_length + 1 / s;
  RationalFunction lam = unit_at_zero(in.dirichlet.poly());
  RationalFunction mu = unit_at_zero(in.neumann.poly());
  out.common = gcd(in.dirichlet.poly(), in.neumann.poly());
  out.phi = RationalFunction::constant(out.gamma) * lam / mu;
  return out;
}

MainEdgeDecomposition decompose_main(const PendantInverseInput& in) {
  PhiData phi = build_phi(in);
  if (in.main_length >= phi.gamma)
    throw Error(ErrorCode::MainTooLong, "main length " + to_string(in.main_length) + " is not below gamma = " + to_string(phi.gamma));

  MainEdgeDecomposition d;
  d.common = phi.common;
  d.cf = cf_expand(phi.phi);
  const std::vector<Rational>& a = d.cf.a;
  const std::vector<Rational>& b = d.cf.b;
  Rational cum = 0;
  std::size_t n = 0;
  // The coefficients sum to gamma > main length, so this stops inside the expansion.
  for (; n < a.size(); ++n) {
    cum += a[n];
    if (cum >= in.main_length) break;
  }
  if (n == a.size()) throw Error(ErrorCode::Invariant, "expansion of Phi does not sum to gamma");
  d.n_main = static_cast<int>(n);
  d.a_n1 = cum - in.main_length;
  d.main.lengths.assign(a.begin(), a.begin() + static_cast<long>(n));
  d.main.lengths.push_back(a[n] - d.a_n1);
  d.main.masses.assign(b.begin(), b.begin() + static_cast<long>(n));

  StieltjesCF tail;
  tail.a.push_back(d.a_n1);
  tail.a.insert(tail.a.end(), a.begin() + static_cast<long>(n) + 1, a.end());
  tail.b.assign(b.begin() + static_cast<long>(n), b.end());
  d.tail = cf_to_ratfun(tail);
  if (d.main.total_length() != in.main_length) throw Error(ErrorCode::Invariant, "main edge lengths do not add up");
  return d;
}

ValidationReport validate_pendant(const PendantInverseInput& in) {
  ValidationReport rep;
  const int q = static_cast<int>(in.lengths.size()) + 1;
  if (sgn(in.main_length) <= 0) rep.fail("lengths", "main length must be positive");
  if (in.lengths.empty()) rep.fail("edges", "need at least one non-main edge");
  for (std::size_t j = 0; j < in.lengths.size(); ++j)
    if (sgn(in.lengths[j]) <= 0) rep.fail("lengths", "length of edge " + std::to_string(j + 1) + " must be positive", {static_cast<int>(j) + 1});

  RootList mu = in.neumann.occurrences();
  RootList lam = in.dirichlet.occurrences();
  if (mu.size() != lam.size()) {
    rep.fail("counts", "Neumann and Dirichlet counts differ (" + std::to_string(mu.size()) + " vs " + std::to_string(lam.size()) + ")");
    return rep;
  }
  const int n = static_cast<int>(mu.size());
  // Equality is decided exactly, so distinct roots always separate; refine without a cutoff.
  const Rational budget = 0;
  bool chain_ok = true;
  auto rel = [&](const RealRoot& x, const RealRoot& y, bool strict, const std::string& label, std::vector<int> idx) {
    Ordering o = compare_roots(x, y, budget);
    if (o == Ordering::Less || (!strict && o == Ordering::Equal)) return;
    chain_ok = false;
    if (o == Ordering::Unresolved)
      rep.fail("1", label + " could not be resolved at the refinement budget", idx);
    else
      rep.fail("1", label + (strict ? " must hold strictly" : " violated") + " (" + describe(x) + " vs " + describe(y) + ")", idx);
  };
  // 0 < mu_1 < lambda_1 <= mu_2 <= ... <= mu_n <= lambda_n
  for (int k = 1; k <= n; ++k) {
    rel(mu[k - 1], lam[k - 1], k == 1, "mu_" + std::to_string(k) + " <= lambda_" + std::to_string(k), {k});
    if (k < n) rel(lam[k - 1], mu[k], false, "lambda_" + std::to_string(k) + " <= mu_" + std::to_string(k + 1), {k, k + 1});
  }
  auto bound = [&](const Spectrum& s, const std::string& name) {
    int pos = 1;
    for (const RealRoot& r : s.roots()) {
      if (r.multiplicity > q - 1)
        rep.fail("2", name + " value " + describe(r) + " has multiplicity " + std::to_string(r.multiplicity) + " > q-1 = " + std::to_string(q - 1), {pos});
      pos += r.multiplicity;
    }
  };
  bound(in.neumann, "Neumann");
  bound(in.dirichlet, "Dirichlet");
  if (!chain_ok || !rep.valid) return rep;

  MainEdgeDecomposition d;
  try {
    d = decompose_main(in);
  } catch (const Error& e) {
    rep.fail(e.code() == ErrorCode::MainTooLong ? "lengths" : "1", e.what());
    return rep;
  }
  if (d.massless_main()) rep.notes.push_back("main edge carries no masses");
  rep.notes.push_back(sgn(d.a_n1) > 0 ? "central mass zero" : "central mass positive");
  for (const RealRoot& r : isolate_real_roots(d.common)) {
    if (vanishes_at(d.tail.num(), r)) continue;
    std::string value = r.is_exact() ? " (tail value " + to_string(d.tail(r.value())) + ")" : "";
    rep.fail("3", "shared value " + describe(r) + " is not a zero of the subgraph tail" + value);
  }
  return rep;
}

CenterInverseInput subgraph_input(const PendantInverseInput& in, const MainEdgeDecomposition& d) {
  CenterInverseInput sub;
  // 1/tail = h/g; h carries the Neumann role, g the Dirichlet role.
  sub.neumann = Spectrum::from_polynomial(d.tail.den() * d.common);
  sub.dirichlet = Spectrum::from_polynomial(d.tail.num() * d.common);
  sub.lengths = in.lengths;
  sub.plan = in.plan;
  sub.allow_single_edge = true;
  return sub;
}

PendantReconstruction reconstruct_pendant(const PendantInverseInput& in) {
  ValidationReport rep = validate_pendant(in);
  if (!rep.valid) throw Error(ErrorCode::Invariant, "spectral data fail validation: " + rep.violations.front().message);

  PendantReconstruction out;
  out.main = decompose_main(in);
  CenterInverseInput sub = subgraph_input(in, out.main);
  out.subgraph_spectra = {sub.neumann, sub.dirichlet};
  out.subgraph = reconstruct_center(sub);

  const MainEdgeDecomposition& d = out.main;
  Rational expected_M = sgn(d.a_n1) > 0 ? Rational(0) : d.cf.b[static_cast<std::size_t>(d.n_main)];
  if (out.subgraph.M != expected_M) throw Error(ErrorCode::Invariant, "central mass disagrees with the main-edge expansion");

  out.graph.root = RootPlacement::Pendant;
  out.graph.central_mass = out.subgraph.M;
  out.graph.main_edge = d.main;
  out.graph.edges = out.subgraph.graph.edges;
  return out;
}

}  // namespace starspec
