#pragma once

#include <vector>

#include "starspec/forward.hpp"
#include "starspec/validation.hpp"

namespace starspec {

struct CenterInverseInput {
  Spectrum neumann;    // lambda^2, zeros of phi_N
  Spectrum dirichlet;  // zeta^2, zeros of phi_D
  std::vector<Rational> lengths;
  ReconstructionPlan plan;
  /// A single edge is only meaningful as the tail of a pendant-rooted problem.
  bool allow_single_edge = false;
};

/// Interlacing chain, the coincidence condition and the multiplicity bounds.
ValidationReport validate_center(const CenterInverseInput& in);

/// (sum 1/l_j) prod(1 - z/lambda^2) / prod(1 - z/zeta^2), reduced.
RationalFunction build_psi(const CenterInverseInput& in);

/// A group of Dirichlet values that always travels to an edge together: one
/// rational value, or the irrational roots of one square-free factor.
struct Cluster {
  Polynomial factor;        // monic, square-free
  RootList roots;           // ascending, multiplicity 1 each
  std::vector<int> positions;      // indices among the distinct Dirichlet values
  int multiplicity = 1;     // how many edges receive it
  std::vector<int> holders;        // edge indices, one per occurrence
  std::vector<Rational> fractions; // share of the polar part, one per holder
  bool is_rational() const { return factor.degree() == 1; }
  Rational value() const { return -factor.coeff(0); }
};

struct ResolvedPlan {
  std::vector<Cluster> clusters;  // ascending by smallest root
  /// Plan in the user-facing format (partition per distinct value, splits of rational values).
  ReconstructionPlan as_plan() const;
};

/// Assigns every Dirichlet occurrence to an edge and splits each residue.
/// Without a user plan: least-loaded edges first, equal splits.
ResolvedPlan plan_partition(const CenterInverseInput& in);

struct CenterReconstruction {
  StarGraph graph;
  Rational M;
  RationalFunction psi;
  ResolvedPlan plan;
};

CenterReconstruction reconstruct_center(const CenterInverseInput& in);

/// The free parameters of the reconstruction: per value its multiplicity,
/// total residue (or polar numerator) and the split simplex.
Json enumerate_constraints(const CenterInverseInput& in);

}  // namespace starspec
