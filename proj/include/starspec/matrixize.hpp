#pragma once

#include <vector>

#include "starspec/forward.hpp"
#include "starspec/validation.hpp"

namespace starspec {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {}

  int dim() const { return dim_; }
  Rational& operator()(int i, int j) { return a_[index(i, j)]; }
  const Rational& operator()(int i, int j) const { return a_[index(i, j)]; }
  bool symmetric() const;
  /// Drops row and column k.
  RationalMatrix without(int k) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j); }
  int dim_ = 0;
  std::vector<Rational> a_;
};

/// Exact determinant by Gaussian elimination.
Rational determinant(RationalMatrix a);

/// Stiffness L and mass matrix of a centre-rooted star with M > 0. Row 0 is the
/// centre, then each edge's masses from the centre outward.
struct Pencil {
  RationalMatrix L;
  RationalMatrix mass;  // diagonal
};
Pencil build_pencil(const StarGraph& g);

/// Symmetry, positive diagonal masses and the star sparsity pattern of g.
/// Throws E_INVARIANT naming the first offending entry.
void check_pencil(const Pencil& p, const StarGraph& g);

/// det(L - z mass), interpolated exactly from dim+2 evaluation points.
Polynomial pencil_det(const RationalMatrix& L, const RationalMatrix& mass);
/// Same for the pencil with the first row and column removed.
Polynomial principal_pencil_det(const Pencil& p);

struct InterlacingCertificate {
  bool passed = true;
  Spectrum full;       // roots of det(L - z mass)
  Spectrum principal;  // roots of the first principal subpencil
  int comparisons = 0;
  std::vector<std::string> failures;
  Json to_json(const OutputOptions& opt = {}) const;
};

/// lambda_1 <= mu_1 <= lambda_2 <= ... <= mu_n <= lambda_{n+1}, certified by
/// interval separation. Throws E_UNRESOLVED if two distinct roots cannot be
/// separated within the budget (0 refines until they are).
InterlacingCertificate interlacing_certificate(const Pencil& p, const Rational& budget = default_budget());

/// {"dim": n, "L": [[...]], "M_diag": [...]}
Json to_json(const Pencil& p);

}  // namespace starspec
