#include "starspec/matrixize.hpp"

#include "starspec/error.hpp"

namespace starspec {

bool RationalMatrix::symmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::without(int k) const {
  RationalMatrix out(dim_ - 1);
  for (int i = 0, r = 0; i < dim_; ++i) {
    if (i == k) continue;
    for (int j = 0, c = 0; j < dim_; ++j) {
      if (j == k) continue;
      out(r, c++) = (*this)(i, j);
    }
    ++r;
  }
  return out;
}

Rational determinant(RationalMatrix a) {
  const int n = a.dim();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int k = c; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (int k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

Pencil build_pencil(const StarGraph& g) {
  if (g.root != RootPlacement::Center) throw Error(ErrorCode::InvalidArgument, "the matrix form needs a centre-rooted graph");
  g.validate();
  if (sgn(g.central_mass) <= 0) throw Error(ErrorCode::RequiresPositiveM, "the matrix form needs a positive central mass");
  int dim = 1;
  for (const Edge& e : g.edges) dim += e.n();
  Pencil p{RationalMatrix(dim), RationalMatrix(dim)};
  p.mass(0, 0) = g.central_mass;
  int row = 1;
  for (const Edge& e : g.edges) {
    const int n = e.n();
    auto len = [&](int k) -> const Rational& { return e.lengths[static_cast<std::size_t>(k)]; };
    p.L(0, 0) += 1 / len(n);
    if (n == 0) continue;
    p.L(0, row) = p.L(row, 0) = -1 / len(n);
    // Row r holds mass k = n - r (innermost first).
    for (int r = 0; r < n; ++r) {
      int k = n - r;
      int i = row + r;
      p.mass(i, i) = e.masses[static_cast<std::size_t>(k - 1)];
      p.L(i, i) = 1 / len(k) + 1 / len(k - 1);
      if (r + 1 < n) p.L(i, i + 1) = p.L(i + 1, i) = -1 / len(k - 1);
    }
    row += n;
  }
  return p;
}

void check_pencil(const Pencil& p, const StarGraph& g) {
  const int dim = p.L.dim();
  if (p.mass.dim() != dim) throw Error(ErrorCode::Invariant, "pencil matrices differ in size");
  if (!p.L.symmetric()) throw Error(ErrorCode::Invariant, "L is not symmetric");
  // Adjacency of the star: centre to each innermost mass, then chains.
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(dim), std::vector<bool>(static_cast<std::size_t>(dim), false));
  int row = 1;
  for (const Edge& e : g.edges) {
    if (e.n() == 0) continue;
    adj[0][static_cast<std::size_t>(row)] = adj[static_cast<std::size_t>(row)][0] = true;
    for (int r = 0; r + 1 < e.n(); ++r) {
      auto i = static_cast<std::size_t>(row + r);
      adj[i][i + 1] = adj[i + 1][i] = true;
    }
    row += e.n();
  }
  if (row != dim) throw Error(ErrorCode::Invariant, "pencil size does not match the graph");
  for (int i = 0; i < dim; ++i) {
    if (sgn(p.mass(i, i)) <= 0) throw Error(ErrorCode::Invariant, "mass matrix entry " + std::to_string(i) + " is not positive");
    for (int j = 0; j < dim; ++j) {
      if (i != j && sgn(p.mass(i, j)) != 0) throw Error(ErrorCode::Invariant, "mass matrix is not diagonal");
      if (i != j && !adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] && sgn(p.L(i, j)) != 0)
        throw Error(ErrorCode::Invariant, "L(" + std::to_string(i) + "," + std::to_string(j) + ") breaks the star pattern");
    }
  }
}

Polynomial pencil_det(const RationalMatrix& L, const RationalMatrix& mass) {
  const int n = L.dim();
  std::vector<Rational> xs, ys;
  for (int t = 0; t < n + 2; ++t) {
    Rational z(t);
    RationalMatrix a = L;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) -= z * mass(i, j);
    xs.push_back(z);
    ys.push_back(determinant(std::move(a)));
  }
  // Newton divided differences.
  std::vector<Rational> c = ys;
  for (std::size_t k = 1; k < c.size(); ++k)
    for (std::size_t i = c.size() - 1; i >= k; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - k]);
  Polynomial out = Polynomial::constant(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) out = out * Polynomial{Rational(-xs[i]), Rational(1)} + Polynomial::constant(c[i]);
  return out;
}

Polynomial principal_pencil_det(const Pencil& p) { return pencil_det(p.L.without(0), p.mass.without(0)); }

InterlacingCertificate interlacing_certificate(const Pencil& p, const Rational& budget) {
  InterlacingCertificate cert;
  cert.full = Spectrum::from_polynomial(pencil_det(p.L, p.mass));
  cert.principal = Spectrum::from_polynomial(principal_pencil_det(p));
  RootList lam = cert.full.occurrences();
  RootList mu = cert.principal.occurrences();
  if (lam.size() != mu.size() + 1) {
    cert.passed = false;
    cert.failures.push_back("expected one more root in the full pencil than in the subpencil");
    return cert;
  }
  auto le = [&](const RealRoot& a, const RealRoot& b, const std::string& label) {
    ++cert.comparisons;
    Ordering o = compare_roots(a, b, budget);
    if (o == Ordering::Unresolved) throw Error(ErrorCode::Unresolved, label + ": intervals still overlap at the refinement width");
    if (o == Ordering::Greater) {
      cert.passed = false;
      cert.failures.push_back(label + " fails (" + describe(a) + " > " + describe(b) + ")");
    }
  };
  for (std::size_t k = 0; k < mu.size(); ++k) {
    le(lam[k], mu[k], "lambda_" + std::to_string(k + 1) + " <= mu_" + std::to_string(k + 1));
    le(mu[k], lam[k + 1], "mu_" + std::to_string(k + 1) + " <= lambda_" + std::to_string(k + 2));
  }
  return cert;
}

Json InterlacingCertificate::to_json(const OutputOptions& opt) const {
  Json j;
  j["passed"] = passed;
  j["comparisons"] = comparisons;
  j["full_spectrum"] = starspec::to_json(full, opt);
  j["principal_spectrum"] = starspec::to_json(principal, opt);
  if (!failures.empty()) j["failures"] = failures;
  return j;
}

Json to_json(const Pencil& p) {
  Json L = Json::array(), m = Json::array();
  for (int i = 0; i < p.L.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < p.L.dim(); ++j) row.push_back(to_string(p.L(i, j)));
    L.push_back(row);
    m.push_back(to_string(p.mass(i, i)));
  }
  return Json{{"dim", p.L.dim()}, {"L", L}, {"M_diag", m}};
}

}  // namespace starspec
