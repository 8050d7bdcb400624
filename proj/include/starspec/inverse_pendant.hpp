#pragma once

#include <vector>

#include "starspec/inverse_center.hpp"

namespace starspec {

struct PendantInverseInput {
  Spectrum neumann;    // mu^2, root free
  Spectrum dirichlet;  // lambda^2, root clamped
  Rational main_length;
  std::vector<Rational> lengths;  // the q-1 non-main edges
  ReconstructionPlan plan;        // applied to the subgraph
};

struct PhiData {
  Rational gamma;       // main length + (sum 1/l_j)^-1
  RationalFunction phi; // reduced
  Polynomial common;    // monic gcd of the two spectral polynomials
};

/// gamma prod(1 - z/lambda^2) / prod(1 - z/mu^2), reduced, with the cancelled factor kept.
PhiData build_phi(const PendantInverseInput& in);

struct MainEdgeDecomposition {
  Edge main;
  int n_main = 0;             // number of masses on the main edge
  Rational a_n1;              // sum_{k<=n} a_k - main length, >= 0
  RationalFunction tail;      // f_n = g/h
  Polynomial common;          // values shared by both spectra, re-inserted downstream
  StieltjesCF cf;             // full expansion of Phi
  bool massless_main() const { return n_main == 0; }
};

/// Splits Phi into the main edge and the subgraph tail. Throws E_MAIN_TOO_LONG
/// if the main length reaches gamma, E_NOT_S0 if the data do not interlace.
MainEdgeDecomposition decompose_main(const PendantInverseInput& in);

/// Counts, the interlacing chain with strict mu_1 < lambda_1, multiplicities
/// <= q-1, and vanishing of the tail at every shared value.
ValidationReport validate_pendant(const PendantInverseInput& in);

struct PendantReconstruction {
  StarGraph graph;
  MainEdgeDecomposition main;
  SpectrumPair subgraph_spectra;  // (theta^2, tau^2) handed to the centre solver
  CenterReconstruction subgraph;
};

PendantReconstruction reconstruct_pendant(const PendantInverseInput& in);

/// The centre-problem input the subgraph stage uses.
CenterInverseInput subgraph_input(const PendantInverseInput& in, const MainEdgeDecomposition& d);

}  // namespace starspec
