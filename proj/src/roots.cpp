#include "starspec/roots.hpp"

#include <algorithm>
#include <utility>

#include "starspec/error.hpp"

namespace starspec {

const Rational& RealRoot::value() const {
  if (!is_exact()) throw Error(ErrorCode::InvalidArgument, "root is not known exactly");
  return lo;
}

Rational default_budget() {
  Rational b(1);
  mpq_div_2exp(b.get_mpq_t(), b.get_mpq_t(), 64);
  return b;
}

SturmSequence::SturmSequence(const Polynomial& squarefree) {
  if (squarefree.is_zero()) throw Error(ErrorCode::InvalidArgument, "Sturm sequence of zero");
  chain_.push_back(squarefree.primitive());
  if (squarefree.degree() == 0) return;
  chain_.push_back(squarefree.derivative().primitive());
  while (true) {
    const Polynomial& a = chain_[chain_.size() - 2];
    const Polynomial& b = chain_.back();
    Polynomial r = -divrem(a, b).remainder;
    if (r.is_zero()) break;
    chain_.push_back(r.primitive());
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int changes = 0, last = 0;
  for (const Polynomial& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int changes = 0, last = 0;
  for (const Polynomial& p : chain_) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const std::optional<Rational>& a, const std::optional<Rational>& b) const {
  if (a && b && *a >= *b) return 0;
  // V(a) - V(b) counts roots in (a, b]; drop b itself when it is a root.
  int va = a ? variations_at(*a) : variations_at_infinity(false);
  int vb = b ? variations_at(*b) : variations_at_infinity(true);
  int n = va - vb;
  if (b && chain_.front().sign_at(*b) == 0) --n;
  return n;
}

namespace {

Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  const Rational& lc = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / lc);
    if (r > m) m = r;
  }
  return m + 1;
}

// Shrink (lo, hi) so that neither endpoint is a root; the interval holds exactly
// one root of s.base(). May end with an exact root.
void clear_endpoints(const SturmSequence& s, RealRoot& r) {
  const Polynomial& f = s.base();
  while (!r.is_exact() && f.sign_at(r.lo) == 0) {
    Rational m = r.midpoint();
    if (f.sign_at(m) == 0) {
      r.lo = r.hi = m;
      return;
    }
    if (s.count(r.lo, m) == 1)
      r.hi = m;
    else
      r.lo = m;
  }
  while (!r.is_exact() && f.sign_at(r.hi) == 0) {
    Rational m = r.midpoint();
    if (f.sign_at(m) == 0) {
      r.lo = r.hi = m;
      return;
    }
    if (s.count(m, r.hi) == 1)
      r.lo = m;
    else
      r.hi = m;
  }
}

// A rational root k/L of a primitive integer polynomial has L dividing the leading
// coefficient; once the interval is narrower than 1/L there is one candidate.
void detect_rational(RealRoot& r) {
  if (r.is_exact()) return;
  Polynomial prim = r.witness.primitive();
  Integer lead = abs(prim.leading().get_num());
  Rational step(Integer(1), lead);
  while (!r.is_exact() && r.width() >= step) bisect_once(r);
  if (r.is_exact()) return;
  Rational scaled = r.lo * Rational(lead);
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  k += 1;
  Rational cand(k, lead);
  cand.canonicalize();
  if (cand < r.hi && prim.sign_at(cand) == 0) r.lo = r.hi = cand;
}

std::vector<RealRoot> isolate_squarefree(const Polynomial& f, const Domain& domain) {
  std::vector<RealRoot> out;
  if (f.degree() <= 0) return out;
  SturmSequence s(f);
  Rational bound = cauchy_bound(f);
  Rational lo = domain.lo ? *domain.lo : Rational(-bound);
  Rational hi = domain.hi ? *domain.hi : bound;
  if (domain.lo && lo < -bound) lo = -bound;
  if (domain.hi && hi > bound) hi = bound;
  if (lo >= hi) return out;
  // Roots of f never sit at +-bound, but a clipped domain endpoint must stay excluded.
  std::vector<std::pair<Rational, Rational>> work{{lo, hi}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int n = s.count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      RealRoot r{f, a, b, 1};
      clear_endpoints(s, r);
      out.push_back(std::move(r));
      continue;
    }
    Rational m = (a + b) / 2;
    if (f.sign_at(m) == 0) out.push_back(RealRoot{f, m, m, 1});
    work.emplace_back(m, b);
    work.emplace_back(a, m);
  }
  for (RealRoot& r : out) detect_rational(r);
  return out;
}

bool interval_before(const RealRoot& a, const RealRoot& b) {
  if (a.is_exact() && b.is_exact()) return a.lo < b.lo;
  if (a.is_exact()) return a.lo <= b.lo;
  if (b.is_exact()) return a.hi <= b.lo;
  return a.hi <= b.lo;
}

}  // namespace

void bisect_once(RealRoot& r) {
  if (r.is_exact()) return;
  Rational m = r.midpoint();
  int sm = r.witness.sign_at(m);
  if (sm == 0) {
    r.lo = r.hi = m;
    return;
  }
  int slo = r.witness.sign_at(r.lo);
  if (sm == slo)
    r.lo = m;
  else
    r.hi = m;
}

RootList isolate_real_roots(const Polynomial& p, const Domain& domain) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "root isolation of the zero polynomial");
  RootList all;
  for (const SquareFreeFactor& sf : squarefree_factor(p)) {
    for (RealRoot& r : isolate_squarefree(sf.factor, domain)) {
      r.multiplicity = sf.multiplicity;
      all.push_back(std::move(r));
    }
  }
  // Roots from different Yun factors are distinct, so refinement always separates them.
  std::sort(all.begin(), all.end(), [](const RealRoot& a, const RealRoot& b) {
    if (interval_before(a, b)) return true;
    if (interval_before(b, a)) return false;
    return compare_roots(a, b, Rational(0)) == Ordering::Less;
  });
  return all;
}

RealRoot refine_root(const Polynomial& p, RealRoot root, const Rational& width) {
  Polynomial f = squarefree_part(p);
  root.witness = f;
  if (root.is_exact()) {
    if (f.sign_at(root.lo) != 0) throw Error(ErrorCode::NotIsolating, "point is not a root");
    return root;
  }
  if (root.lo > root.hi) throw Error(ErrorCode::NotIsolating, "empty interval");
  int slo = f.sign_at(root.lo), shi = f.sign_at(root.hi);
  if (slo == 0 || shi == 0) {
    SturmSequence s(f);
    if (s.count(root.lo, root.hi) != 1) throw Error(ErrorCode::NotIsolating, "interval does not isolate one root");
    clear_endpoints(s, root);
  } else if (slo == shi) {
    throw Error(ErrorCode::NotIsolating, "no sign change across the interval");
  }
  while (!root.is_exact() && root.width() > width) bisect_once(root);
  return root;
}

namespace {

bool overlap_has_common_root(const RealRoot& a, const RealRoot& b) {
  Polynomial g = gcd(a.witness, b.witness);
  if (g.degree() <= 0) return false;
  Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (lo >= hi) return false;
  return SturmSequence(squarefree_part(g)).count(lo, hi) > 0;
}

}  // namespace

Ordering compare_root_value(RealRoot a, const Rational& v, const Rational& budget) {
  if (a.is_exact()) return a.lo < v ? Ordering::Less : (a.lo > v ? Ordering::Greater : Ordering::Equal);
  if (v > a.lo && v < a.hi && a.witness.sign_at(v) == 0) return Ordering::Equal;
  while (true) {
    if (a.is_exact()) return a.lo < v ? Ordering::Less : (a.lo > v ? Ordering::Greater : Ordering::Equal);
    if (a.hi <= v) return Ordering::Less;
    if (a.lo >= v) return Ordering::Greater;
    if (a.width() <= budget) return Ordering::Unresolved;
    bisect_once(a);
  }
}

Ordering compare_roots(RealRoot a, RealRoot b, const Rational& budget) {
  if (b.is_exact()) return compare_root_value(std::move(a), b.lo, budget);
  if (a.is_exact()) {
    Ordering o = compare_root_value(std::move(b), a.lo, budget);
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return o;
  }
  if (a.hi <= b.lo) return Ordering::Less;
  if (b.hi <= a.lo) return Ordering::Greater;
  if (overlap_has_common_root(a, b)) return Ordering::Equal;
  // Distinct roots: refine until the intervals separate.
  while (true) {
    if (a.is_exact() || b.is_exact()) return compare_roots(std::move(a), std::move(b), budget);
    if (a.hi <= b.lo) return Ordering::Less;
    if (b.hi <= a.lo) return Ordering::Greater;
    bool a_small = a.width() <= budget, b_small = b.width() <= budget;
    if (a_small && b_small && sgn(budget) > 0) return Ordering::Unresolved;
    if (a.width() >= b.width())
      bisect_once(a);
    else
      bisect_once(b);
  }
}

bool vanishes_at(const Polynomial& q, const RealRoot& root) {
  if (q.is_zero()) return true;
  if (root.is_exact()) return q.sign_at(root.lo) == 0;
  Polynomial g = gcd(q, root.witness);
  if (g.degree() <= 0) return false;
  return SturmSequence(g).count(root.lo, root.hi) > 0;
}

int multiplicity_at(const Polynomial& q, const RealRoot& root) {
  if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "multiplicity in the zero polynomial");
  int k = 0;
  Polynomial d = q;
  while (!d.is_zero() && vanishes_at(d, root)) {
    ++k;
    d = d.derivative();
  }
  return k;
}

}  // namespace starspec
