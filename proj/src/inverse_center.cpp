#include "starspec/inverse_center.hpp"

#include <algorithm>
#include <numeric>

#include "starspec/error.hpp"

namespace starspec {

namespace {

int neumann_bound(int q) { return std::max(1, q - 1); }

Rational reciprocal_sum(const std::vector<Rational>& lengths) {
  Rational s = 0;
  for (const Rational& l : lengths) s += 1 / l;
  return s;
}

// Normalised product prod(1 - z/r) for the roots of the monic p.
RationalFunction unit_at_zero(const Polynomial& p) { return RationalFunction(p, Polynomial::constant(p(Rational(0)))); }

void check_lengths(const std::vector<Rational>& lengths, ValidationReport& rep) {
  for (std::size_t j = 0; j < lengths.size(); ++j)
    if (sgn(lengths[j]) <= 0) rep.fail("lengths", "length of edge " + std::to_string(j) + " must be positive", {static_cast<int>(j) + 1});
}

std::string plan_error(const std::string& what) { return "plan: " + what; }

}  // namespace

ValidationReport validate_center(const CenterInverseInput& in) {
  ValidationReport rep;
  const int q = static_cast<int>(in.lengths.size());
  if (q < (in.allow_single_edge ? 1 : 2)) rep.fail("edges", "need at least " + std::string(in.allow_single_edge ? "1 edge" : "2 edges"));
  check_lengths(in.lengths, rep);

  RootList lam = in.neumann.occurrences();
  RootList zeta = in.dirichlet.occurrences();
  const int n = static_cast<int>(zeta.size());
  const int nl = static_cast<int>(lam.size());
  if (nl != n + 1 && nl != n) {
    rep.fail("counts", "Neumann count must equal the Dirichlet count or exceed it by one (got " + std::to_string(nl) + " and " +
                           std::to_string(n) + ")");
    return rep;
  }
  rep.notes.push_back(nl == n + 1 ? "central mass positive" : "central mass zero");
  // Equality is decided exactly, so distinct roots always separate; refine without a cutoff.
  const Rational budget = 0;

  auto rel = [&](const RealRoot& a, const RealRoot& b, bool strict, const std::string& label, std::vector<int> idx) {
    Ordering o = compare_roots(a, b, budget);
    if (o == Ordering::Unresolved)
      rep.fail("1", label + " could not be resolved at the refinement budget", idx);
    else if (o == Ordering::Greater || (strict && o == Ordering::Equal))
      rep.fail("1", label + (strict ? " must hold strictly" : " violated") + " (" + describe(a) + " vs " + describe(b) + ")", idx);
  };
  // 0 < l1 < z1 <= l2 <= z2 <= ... <= ln <= zn < l(n+1)
  for (int k = 1; k <= n; ++k) {
    rel(lam[k - 1], zeta[k - 1], k == 1, "lambda_" + std::to_string(k) + " <= zeta_" + std::to_string(k), {k});
    if (k < nl) rel(zeta[k - 1], lam[k], k == n, "zeta_" + std::to_string(k) + " <= lambda_" + std::to_string(k + 1), {k, k + 1});
  }
  for (int k = 2; k <= n; ++k) {
    bool left = compare_roots(zeta[k - 2], lam[k - 1], budget) == Ordering::Equal;
    bool right = compare_roots(lam[k - 1], zeta[k - 1], budget) == Ordering::Equal;
    if (left != right)
      rep.fail("2", "zeta_" + std::to_string(k - 1) + " = lambda_" + std::to_string(k) + " must hold exactly when lambda_" + std::to_string(k) +
                        " = zeta_" + std::to_string(k),
               {k});
  }
  int pos = 1;
  for (const RealRoot& r : in.neumann.roots()) {
    if (r.multiplicity > neumann_bound(q))
      rep.fail("3", "Neumann value " + describe(r) + " has multiplicity " + std::to_string(r.multiplicity) + " > " + std::to_string(neumann_bound(q)), {pos});
    pos += r.multiplicity;
  }
  pos = 1;
  for (const RealRoot& r : in.dirichlet.roots()) {
    if (r.multiplicity > q)
      rep.fail("3'", "Dirichlet value " + describe(r) + " has multiplicity " + std::to_string(r.multiplicity) + " > " + std::to_string(q), {pos});
    pos += r.multiplicity;
  }
  return rep;
}

RationalFunction build_psi(const CenterInverseInput& in) {
  if (in.lengths.empty()) throw Error(ErrorCode::Invariant, "no edge lengths given");
  for (const Rational& l : in.lengths)
    if (sgn(l) <= 0) throw Error(ErrorCode::Invariant, "edge lengths must be positive");
  return RationalFunction::constant(reciprocal_sum(in.lengths)) * unit_at_zero(in.neumann.poly()) / unit_at_zero(in.dirichlet.poly());
}

ReconstructionPlan ResolvedPlan::as_plan() const {
  ReconstructionPlan p;
  std::size_t distinct = 0;
  for (const Cluster& c : clusters) distinct += c.roots.size();
  std::vector<std::vector<int>> part(distinct);
  for (const Cluster& c : clusters) {
    for (int pos : c.positions) part[static_cast<std::size_t>(pos)] = c.holders;
    if (c.is_rational()) p.residue_split[c.value()] = c.fractions;
  }
  p.partition = part;
  return p;
}

ResolvedPlan plan_partition(const CenterInverseInput& in) {
  const int q = static_cast<int>(in.lengths.size());
  ResolvedPlan out;
  // Group the distinct Dirichlet values into clusters.
  const RootList& distinct = in.dirichlet.roots();
  for (int i = 0; i < static_cast<int>(distinct.size()); ++i) {
    const RealRoot& r = distinct[static_cast<std::size_t>(i)];
    if (r.is_exact()) {
      Cluster c;
      c.factor = Polynomial{Rational(-r.value()), Rational(1)};
      c.roots = {RealRoot{c.factor, r.lo, r.hi, 1}};
      c.positions = {i};
      c.multiplicity = r.multiplicity;
      out.clusters.push_back(std::move(c));
      continue;
    }
    auto same = std::find_if(out.clusters.begin(), out.clusters.end(), [&](const Cluster& c) {
      return !c.is_rational() && !c.roots.empty() && c.roots[0].witness == r.witness;
    });
    if (same != out.clusters.end()) {
      same->roots.push_back(r);
      same->positions.push_back(i);
      continue;
    }
    Cluster c;
    c.roots = {r};
    c.positions = {i};
    c.multiplicity = r.multiplicity;
    out.clusters.push_back(std::move(c));
  }
  for (Cluster& c : out.clusters) {
    if (!c.factor.is_zero()) continue;
    // Irrational block: the Yun factor with its rational roots divided out.
    Polynomial f = c.roots[0].witness.monic();
    for (const RealRoot& r : distinct)
      if (r.is_exact() && f.sign_at(r.value()) == 0) f = exact_div(f, Polynomial{Rational(-r.value()), Rational(1)});
    c.factor = f;
    for (RealRoot& r : c.roots) {
      r.witness = f;
      r.multiplicity = 1;
    }
  }

  if (in.plan.partition) {
    const auto& part = *in.plan.partition;
    if (part.size() != distinct.size())
      throw Error(ErrorCode::PlanInfeasible, plan_error("partition has " + std::to_string(part.size()) + " rows for " +
                                                        std::to_string(distinct.size()) + " distinct Dirichlet values"));
    for (Cluster& c : out.clusters) {
      const std::vector<int>& row = part[static_cast<std::size_t>(c.positions[0])];
      if (static_cast<int>(row.size()) != c.multiplicity)
        throw Error(ErrorCode::PlanInfeasible, plan_error("row " + std::to_string(c.positions[0]) + " must list " +
                                                          std::to_string(c.multiplicity) + " edges, one per occurrence"));
      std::vector<int> sorted = row;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::PlanInfeasible,
                    plan_error("row " + std::to_string(c.positions[0]) + " puts one value twice on the same edge, so that edge's values are not strictly increasing"));
      for (int e : row)
        if (e < 0 || e >= q) throw Error(ErrorCode::PlanInfeasible, plan_error("edge index " + std::to_string(e) + " out of range"));
      for (int pos : c.positions) {
        std::vector<int> other = part[static_cast<std::size_t>(pos)];
        std::sort(other.begin(), other.end());
        if (other != sorted)
          throw Error(ErrorCode::PlanInfeasible, plan_error("conjugate irrational values (rows " + std::to_string(c.positions[0]) + ", " +
                                                            std::to_string(pos) + ") must go to the same edges"));
      }
      c.holders = row;
    }
  } else {
    std::vector<int> load(static_cast<std::size_t>(q), 0);
    for (Cluster& c : out.clusters) {
      if (c.multiplicity > q)
        throw Error(ErrorCode::PlanInfeasible, plan_error("a value of multiplicity " + std::to_string(c.multiplicity) + " cannot be placed on " +
                                                          std::to_string(q) + " edges"));
      std::vector<int> order(static_cast<std::size_t>(q));
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return load[static_cast<std::size_t>(a)] < load[static_cast<std::size_t>(b)]; });
      c.holders.assign(order.begin(), order.begin() + c.multiplicity);
      std::sort(c.holders.begin(), c.holders.end());
      for (int e : c.holders) load[static_cast<std::size_t>(e)] += static_cast<int>(c.roots.size());
    }
  }

  for (const auto& [key, fr] : in.plan.residue_split) {
    auto it = std::find_if(out.clusters.begin(), out.clusters.end(), [&](const Cluster& c) { return c.is_rational() && c.value() == key; });
    if (it == out.clusters.end())
      throw Error(ErrorCode::PlanInfeasible, plan_error("residue split given for " + to_string(key) + ", which is not a Dirichlet value"));
    if (static_cast<int>(fr.size()) != it->multiplicity)
      throw Error(ErrorCode::PlanInfeasible, plan_error("split for " + to_string(key) + " needs " + std::to_string(it->multiplicity) + " fractions"));
    Rational sum = 0;
    for (const Rational& x : fr) {
      if (sgn(x) <= 0) throw Error(ErrorCode::PlanInfeasible, plan_error("split fractions for " + to_string(key) + " must be positive"));
      sum += x;
    }
    if (sum != 1) throw Error(ErrorCode::PlanInfeasible, plan_error("split fractions for " + to_string(key) + " sum to " + to_string(sum) + ", not 1"));
    it->fractions = fr;
  }
  for (Cluster& c : out.clusters)
    if (c.fractions.empty()) c.fractions.assign(static_cast<std::size_t>(c.multiplicity), Rational(1, c.multiplicity));
  return out;
}

CenterReconstruction reconstruct_center(const CenterInverseInput& in) {
  const int q = static_cast<int>(in.lengths.size());
  if (q < (in.allow_single_edge ? 1 : 2)) throw Error(ErrorCode::Invariant, "a centre-rooted star needs at least 2 edges");
  ValidationReport rep = validate_center(in);
  if (!rep.valid) throw Error(ErrorCode::Invariant, "spectral data fail validation: " + rep.violations.front().message);

  CenterReconstruction out;
  out.psi = build_psi(in);
  out.plan = plan_partition(in);

  DivRem dr = divrem(out.psi.num(), out.psi.den());
  if (dr.quotient.degree() > 1) throw Error(ErrorCode::NotS0, "Psi grows faster than linearly");
  out.M = -dr.quotient.coeff(1);
  if (sgn(out.M) < 0) throw Error(ErrorCode::NotS0, "negative central mass from Psi");

  std::vector<Polynomial> factors;
  Polynomial prod = Polynomial::constant(1);
  for (const Cluster& c : out.plan.clusters) {
    factors.push_back(c.factor);
    prod *= c.factor;
  }
  if (!(prod == out.psi.den())) throw Error(ErrorCode::NotS0, "reduced denominator of Psi is not the radical of the Dirichlet polynomial");
  PolarDecomposition polar = polar_decomposition(out.psi, factors);

  out.graph.root = RootPlacement::Center;
  out.graph.central_mass = out.M;
  for (int j = 0; j < q; ++j) {
    RationalFunction psi_j = RationalFunction::constant(1 / in.lengths[static_cast<std::size_t>(j)]);
    for (std::size_t c = 0; c < out.plan.clusters.size(); ++c) {
      const Cluster& cl = out.plan.clusters[c];
      for (std::size_t h = 0; h < cl.holders.size(); ++h) {
        if (cl.holders[h] != j) continue;
        RationalFunction part(polar.parts[c].numerator * cl.fractions[h], polar.parts[c].factor);
        // Shift so psi_j(0) stays 1/l_j.
        psi_j = psi_j + part - RationalFunction::constant(part(Rational(0)));
      }
    }
    StieltjesCF cf = cf_expand(psi_j.reciprocal());
    Edge e;
    e.lengths.assign(cf.a.rbegin(), cf.a.rend());
    e.masses.assign(cf.b.rbegin(), cf.b.rend());
    if (e.total_length() != in.lengths[static_cast<std::size_t>(j)])
      throw Error(ErrorCode::Invariant, "reconstructed edge length differs from the prescribed one");
    out.graph.edges.push_back(std::move(e));
  }
  return out;
}

Json enumerate_constraints(const CenterInverseInput& in) {
  RationalFunction psi = build_psi(in);
  ResolvedPlan plan = plan_partition(in);
  DivRem dr = divrem(psi.num(), psi.den());
  std::vector<Polynomial> factors;
  for (const Cluster& c : plan.clusters) factors.push_back(c.factor);
  PolarDecomposition polar = polar_decomposition(psi, factors);

  Json j;
  j["edges"] = in.lengths.size();
  j["central_mass"] = to_string(-dr.quotient.coeff(1));
  j["constant_B"] = to_string(dr.quotient.coeff(0));
  j["psi"] = Json{{"num", to_json(psi.num())}, {"den", to_json(psi.den())}};
  Json values = Json::array();
  for (std::size_t c = 0; c < plan.clusters.size(); ++c) {
    const Cluster& cl = plan.clusters[c];
    Json v;
    if (cl.is_rational()) {
      v["value"] = to_string(cl.value());
      v["total_residue"] = to_string(polar.parts[c].numerator.coeff(0));
    } else {
      v["factor"] = to_json(cl.factor);
      v["polar_numerator"] = to_json(polar.parts[c].numerator);
      Json roots = Json::array();
      for (const RealRoot& r : cl.roots) roots.push_back(to_json(r));
      v["roots"] = roots;
    }
    v["multiplicity"] = cl.multiplicity;
    v["split_simplex"] = std::to_string(cl.multiplicity) + " positive fractions summing to 1";
    v["default_holders"] = cl.holders;
    values.push_back(v);
  }
  j["dirichlet_values"] = values;
  j["partition_rule"] =
      "each value of multiplicity m goes to m distinct edges; an edge holds each value at most once; "
      "conjugate irrational values travel together";
  j["edge_count_rule"] = "n_j equals the number of values assigned to edge j";
  return j;
}

}  // namespace starspec
