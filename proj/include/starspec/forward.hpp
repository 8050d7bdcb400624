#pragma once

#include <optional>
#include <vector>

#include "starspec/cfrac.hpp"
#include "starspec/model.hpp"

namespace starspec {

/// Boundary flavour at the far end of the recurrence: R_{-1} = 1/l_0 for a clamped
/// end, R_{-1} = 0 for a free one (l_0 = infinity).
enum class EndFlavor { DirichletEnd, NeumannEnd };

struct CauerPair {
  Polynomial even;  // R_{2n}
  Polynomial odd;   // R_{2n-1}
};

/// R_{-1}, R_0, R_1, ..., R_{2n} for the edge.
std::vector<Polynomial> cauer_sequence(const Edge& e, EndFlavor flavor);
CauerPair edge_cauer_polys(const Edge& e, EndFlavor flavor);

struct CenterPolys {
  Polynomial phi_N;
  Polynomial phi_D;
};

/// Characteristic polynomials of a star of the given edges with central mass M,
/// Neumann resp. Dirichlet condition at the centre.
CenterPolys star_polys(const std::vector<Edge>& edges, const Rational& M);
CenterPolys char_polys_center(const StarGraph& g);

struct PendantPolys {
  Polynomial phi_l0;   // clamped root, zeros lambda^2
  Polynomial phi_inf;  // free root, zeros mu^2
};
PendantPolys char_polys_pendant(const StarGraph& g);

/// Squared eigenvalues on (0, inf) with multiplicities.
Spectrum spectrum_of(const Polynomial& p);

/// Centre root: (zeros of phi_N, zeros of phi_D). Pendant root: (zeros of
/// phi_inf, zeros of phi_l0).
SpectrumPair spectra_of(const StarGraph& g);

/// Centre root: phi_D / phi_N. Pendant root: l_0 phi(l_0) / phi(inf).
RationalFunction spectral_quotient(const StarGraph& g);

/// phi^(j) = R_{2n}/R_{2n-1} of an edge.
RationalFunction edge_quotient(const Edge& e);

struct LagrangeResult {
  bool ok = true;
  std::optional<int> failing_k;
};
/// R_{2k}(l_0) R_{2k-1}(inf) - R_{2k-1}(l_0) R_{2k}(inf) = -1/l_0 for k = 0..n.
LagrangeResult lagrange_check(const Edge& main);

/// l = l_0 R_{2n}(l_0, 0) / R_{2n}(inf, 0).
bool total_length_identity(const Edge& main);

/// cf_expand(phi^(j)) equals (l_n, m_n, ..., m_1, l_0) interleaved.
bool edge_cf_identity(const Edge& e);

/// phi_D/phi_N == 1/(sum 1/phi^(j) - M z), and the factored form of phi_N.
bool center_quotient_identity(const StarGraph& g);

/// The two Remark-type identities tying phi(l_0), phi(inf) to the subgraph
/// polynomials, and the branching continued fraction for l_0 phi(l_0)/phi(inf).
bool pendant_subgraph_identities(const StarGraph& g);
bool branching_cf_identity(const StarGraph& g);

struct MonotonicityReport {
  bool monotone = true;
  int comparisons = 0;
  int unresolved = 0;
  int unresolved_rational = 0;  // unresolved although both roots were rational
};

/// Sorted Neumann eigenvalues are non-increasing as the central mass grows
/// through the ascending list.
MonotonicityReport neumann_monotonicity(const StarGraph& g, const std::vector<Rational>& masses,
                                        const Rational& budget = default_budget());

}  // namespace starspec
