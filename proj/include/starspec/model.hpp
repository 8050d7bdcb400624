#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starspec/roots.hpp"

namespace starspec {

/// One string: interval lengths l_0..l_n (pendant end toward the centre) and the
/// point masses m_1..m_n between them. A main edge is read root toward centre.
struct Edge {
  std::vector<Rational> lengths;
  std::vector<Rational> masses;

  int n() const { return static_cast<int>(masses.size()); }
  Rational total_length() const;
  /// Throws E_INVARIANT on a count mismatch or a nonpositive entry.
  void validate(const std::string& where = "edge") const;
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class RootPlacement { Center, Pendant };

struct StarGraph {
  RootPlacement root = RootPlacement::Center;
  Rational central_mass;
  std::vector<Edge> edges;         // all q edges (centre root) or the q-1 non-main edges
  std::optional<Edge> main_edge;   // pendant root only

  int q() const { return static_cast<int>(edges.size()) + (main_edge ? 1 : 0); }
  /// Number of point masses, counting the central one when it is positive.
  int total_masses() const;
  void validate() const;
  friend bool operator==(const StarGraph&, const StarGraph&) = default;
};

/// Multiset of positive squared eigenvalues, held as a monic polynomial whose
/// roots are the values, together with the isolated roots.
class Spectrum {
 public:
  Spectrum() : poly_(Polynomial::constant(1)) {}
  /// Values with multiplicities; values must be positive.
  static Spectrum from_values(const std::vector<std::pair<Rational, int>>& values);
  /// Every root of p must be real and positive.
  static Spectrum from_polynomial(const Polynomial& p);

  const Polynomial& poly() const { return poly_; }
  const RootList& roots() const { return roots_; }
  int count() const { return poly_.degree(); }
  bool all_rational() const;
  /// Each value repeated by multiplicity, ascending.
  RootList occurrences() const;
  /// Exact (value, mult) list; throws E_IRRATIONAL_POLE if a value is irrational.
  std::vector<std::pair<Rational, int>> rational_values() const;
  friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.poly_ == b.poly_; }

 private:
  Polynomial poly_;
  RootList roots_;
};

struct SpectrumPair {
  Spectrum neumann;
  Spectrum dirichlet;
};

/// User control over the non-uniqueness of the centre-rooted reconstruction.
struct ReconstructionPlan {
  /// partition[i] lists the edges receiving the i-th distinct Dirichlet value
  /// (ascending), one edge per occurrence.
  std::optional<std::vector<std::vector<int>>> partition;
  /// value -> fractions of its residue, in the order of the holding edges.
  std::map<Rational, std::vector<Rational>> residue_split;

  bool empty() const { return !partition && residue_split.empty(); }
};

}  // namespace starspec
