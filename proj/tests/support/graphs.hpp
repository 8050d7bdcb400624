#pragma once

// Random star graphs for property tests.

#include "gen.hpp"
#include "starspec/model.hpp"

namespace gen {

using starspec::Edge;
using starspec::RootPlacement;
using starspec::StarGraph;

inline Edge edge(Rng& rng, int min_n, int max_n, long bound = 20) {
  Edge e;
  int n = static_cast<int>(uniform(rng, min_n, max_n));
  e.lengths.push_back(positive(rng, bound));
  for (int k = 0; k < n; ++k) {
    e.masses.push_back(positive(rng, bound));
    e.lengths.push_back(positive(rng, bound));
  }
  return e;
}

inline Rational central_mass(Rng& rng, bool allow_zero, long bound = 20) {
  if (allow_zero && uniform(rng, 0, 1) == 0) return 0;
  return positive(rng, bound);
}

struct GraphShape {
  int min_q = 2;
  int max_q = 5;
  int min_n = 0;
  int max_n = 4;
  bool allow_zero_mass = true;
  bool duplicate = false;  // copy one edge to force repeated eigenvalues
};

inline StarGraph center_graph(Rng& rng, const GraphShape& s = {}) {
  StarGraph g;
  g.root = RootPlacement::Center;
  g.central_mass = central_mass(rng, s.allow_zero_mass);
  int q = static_cast<int>(uniform(rng, s.min_q, s.max_q));
  for (int j = 0; j < q; ++j) g.edges.push_back(edge(rng, s.min_n, s.max_n));
  if (s.duplicate && q >= 2) {
    std::size_t from = static_cast<std::size_t>(uniform(rng, 0, q - 1));
    std::size_t to = (from + 1 + static_cast<std::size_t>(uniform(rng, 0, q - 2))) % static_cast<std::size_t>(q);
    g.edges[to] = g.edges[from];
  }
  return g;
}

/// q counts the main edge, so the subgraph has q-1 >= 1 edges.
inline StarGraph pendant_graph(Rng& rng, const GraphShape& s = {}) {
  StarGraph g;
  g.root = RootPlacement::Pendant;
  g.central_mass = central_mass(rng, s.allow_zero_mass);
  int q = static_cast<int>(uniform(rng, s.min_q, s.max_q));
  g.main_edge = edge(rng, s.min_n, s.max_n);
  for (int j = 0; j + 1 < q; ++j) g.edges.push_back(edge(rng, s.min_n, s.max_n));
  if (s.duplicate && q >= 3) {
    std::size_t n = g.edges.size();
    std::size_t from = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    g.edges[(from + 1) % n] = g.edges[from];
  }
  return g;
}

}  // namespace gen
