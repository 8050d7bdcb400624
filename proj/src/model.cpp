#include "starspec/model.hpp"

#include "starspec/error.hpp"

namespace starspec {

Rational Edge::total_length() const {
  Rational s = 0;
  for (const Rational& l : lengths) s += l;
  return s;
}

void Edge::validate(const std::string& where) const {
  if (lengths.size() != masses.size() + 1)
    throw Error(ErrorCode::Invariant, where + ": needs exactly one more length than masses (got " +
                                          std::to_string(lengths.size()) + " lengths, " +
                                          std::to_string(masses.size()) + " masses)");
  for (std::size_t i = 0; i < lengths.size(); ++i)
    if (sgn(lengths[i]) <= 0) throw Error(ErrorCode::Invariant, where + ".lengths[" + std::to_string(i) + "] must be positive");
  for (std::size_t i = 0; i < masses.size(); ++i)
    if (sgn(masses[i]) <= 0) throw Error(ErrorCode::Invariant, where + ".masses[" + std::to_string(i) + "] must be positive");
}

int StarGraph::total_masses() const {
  int n = sgn(central_mass) > 0 ? 1 : 0;
  for (const Edge& e : edges) n += e.n();
  if (main_edge) n += main_edge->n();
  return n;
}

void StarGraph::validate() const {
  if (sgn(central_mass) < 0) throw Error(ErrorCode::Invariant, "central_mass must be nonnegative");
  if (root == RootPlacement::Center) {
    if (main_edge) throw Error(ErrorCode::Invariant, "a centre-rooted graph has no main edge");
    if (edges.size() < 2) throw Error(ErrorCode::Invariant, "a centre-rooted graph needs at least 2 edges");
  } else {
    if (!main_edge) throw Error(ErrorCode::Invariant, "a pendant-rooted graph needs a main edge");
    if (edges.empty()) throw Error(ErrorCode::Invariant, "a pendant-rooted graph needs at least 1 non-main edge");
    main_edge->validate("main_edge");
  }
  for (std::size_t j = 0; j < edges.size(); ++j) edges[j].validate("edges[" + std::to_string(j) + "]");
}

Spectrum Spectrum::from_values(const std::vector<std::pair<Rational, int>>& values) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& [v, m] : values) {
    if (sgn(v) <= 0) throw Error(ErrorCode::Invariant, "spectral value " + to_string(v) + " must be positive");
    if (m < 1) throw Error(ErrorCode::Invariant, "multiplicity of " + to_string(v) + " must be at least 1");
    for (int k = 0; k < m; ++k) p *= Polynomial{Rational(-v), Rational(1)};
  }
  return from_polynomial(p);
}

Spectrum Spectrum::from_polynomial(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::Invariant, "spectral polynomial is zero");
  Spectrum s;
  s.poly_ = p.monic();
  s.roots_ = isolate_real_roots(s.poly_, Domain::positive());
  int total = 0;
  for (const RealRoot& r : s.roots_) total += r.multiplicity;
  if (total != s.poly_.degree())
    throw Error(ErrorCode::Invariant, "spectral polynomial has roots that are not real and positive");
  return s;
}

bool Spectrum::all_rational() const {
  for (const RealRoot& r : roots_)
    if (!r.is_exact()) return false;
  return true;
}

RootList Spectrum::occurrences() const {
  RootList out;
  for (const RealRoot& r : roots_)
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r);
  return out;
}

std::vector<std::pair<Rational, int>> Spectrum::rational_values() const {
  std::vector<std::pair<Rational, int>> out;
  for (const RealRoot& r : roots_) {
    if (!r.is_exact()) throw Error(ErrorCode::IrrationalPole, "spectrum contains an irrational value");
    out.emplace_back(r.value(), r.multiplicity);
  }
  return out;
}

}  // namespace starspec
