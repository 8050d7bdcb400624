#include "doctest.h"

#include <functional>

#include "graphs.hpp"
#include "starspec/error.hpp"
#include "starspec/inverse_pendant.hpp"

using namespace starspec;

namespace {
Rational q(const char* s) { return parse_rational(s); }

PendantInverseInput three_edge_example() {
  PendantInverseInput in;
  in.neumann = Spectrum::from_values({{q("1/2"), 1}, {q("3/2"), 1}, {q("2"), 1}});
  in.dirichlet = Spectrum::from_values({{q("1"), 1}, {q("2"), 2}});
  in.main_length = 2;
  in.lengths = {q("2"), q("1")};
  return in;
}

PendantInverseInput from_graph(const StarGraph& g) {
  SpectrumPair s = spectra_of(g);
  PendantInverseInput in;
  in.neumann = s.neumann;
  in.dirichlet = s.dirichlet;
  in.main_length = g.main_edge->total_length();
  for (const Edge& e : g.edges) in.lengths.push_back(e.total_length());
  return in;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}
}  // namespace

TEST_CASE("phi of the three-edge example") {
  PhiData p = build_phi(three_edge_example());
  CHECK(p.gamma == q("8/3"));
  CHECK(p.phi == RationalFunction(Polynomial{q("2"), q("-3"), q("1")}, Polynomial{q("3/4"), q("-2"), q("1")}));
  CHECK(p.common == Polynomial{q("-2"), q("1")});
}

TEST_CASE("phi without spectra or shared values") {
  PendantInverseInput in = three_edge_example();
  in.neumann = Spectrum();
  in.dirichlet = Spectrum();
  PhiData p = build_phi(in);
  CHECK(p.phi == RationalFunction::constant(q("8/3")));
  in.neumann = Spectrum::from_values({{q("1"), 1}});
  in.dirichlet = Spectrum::from_values({{q("3"), 1}});
  CHECK(build_phi(in).common == Polynomial::constant(1));
}

TEST_CASE("main edge decomposition of the three-edge example") {
  MainEdgeDecomposition d = decompose_main(three_edge_example());
  CHECK(d.cf.a == std::vector<Rational>{q("1"), q("4/3"), q("1/3")});
  CHECK(d.cf.b == std::vector<Rational>{q("1"), q("3")});
  CHECK(d.n_main == 1);
  CHECK(d.a_n1 == q("1/3"));
  CHECK(d.main == Edge{{q("1"), q("1")}, {q("1")}});
  CHECK(d.tail == RationalFunction(Polynomial{q("2"), q("-1")}, Polynomial{q("3"), q("-3")}));
  CHECK(d.tail(q("2")) == 0);
}

TEST_CASE("main length boundary cases") {
  // gamma = L + 2/3 scales the expansion by c = gamma / (8/3): a -> c a, b -> b / c.
  PendantInverseInput in = three_edge_example();
  in.main_length = q("14/3");  // c = 2, L = a_0 + a_1 exactly
  MainEdgeDecomposition d = decompose_main(in);
  CHECK(d.n_main == 1);
  CHECK(d.a_n1 == 0);
  CHECK(d.main == Edge{{q("2"), q("8/3")}, {q("1/2")}});

  in.main_length = q("1/5");  // c = 13/40 > L
  MainEdgeDecomposition m = decompose_main(in);
  CHECK(m.massless_main());
  CHECK(m.main == Edge{{q("1/5")}, {}});
  CHECK(m.a_n1 == q("1/8"));

  in.main_length = q("2/5");  // L = a_0 exactly
  MainEdgeDecomposition e = decompose_main(in);
  CHECK(e.n_main == 0);
  CHECK(e.a_n1 == 0);

  PendantInverseInput empty = three_edge_example();
  empty.neumann = Spectrum();
  empty.dirichlet = Spectrum();
  MainEdgeDecomposition z = decompose_main(empty);
  CHECK(z.main == Edge{{q("2")}, {}});
  CHECK(z.tail == RationalFunction::constant(q("2/3")));
}

TEST_CASE("three-edge example with split 2/3, 1/3") {
  PendantInverseInput in = three_edge_example();
  in.plan.residue_split[q("2")] = {q("2/3"), q("1/3")};
  CHECK(validate_pendant(in).valid);
  PendantReconstruction r = reconstruct_pendant(in);
  CHECK(r.graph.central_mass == 0);
  CHECK(*r.graph.main_edge == Edge{{q("1"), q("1")}, {q("1")}});
  REQUIRE(r.graph.edges.size() == 2);
  CHECK(r.graph.edges[0] == Edge{{q("4/3"), q("2/3")}, {q("9/8")}});
  CHECK(r.graph.edges[1] == Edge{{q("1/3"), q("2/3")}, {q("9/4")}});
  SpectrumPair s = spectra_of(r.graph);
  CHECK(s.neumann == in.neumann);
  CHECK(s.dirichlet == in.dirichlet);
}

TEST_CASE("three-edge example with the default plan") {
  PendantReconstruction r = reconstruct_pendant(three_edge_example());
  CHECK(r.graph.edges[0] == Edge{{q("6/5"), q("4/5")}, {q("25/24")}});
  CHECK(r.graph.edges[1] == Edge{{q("3/7"), q("4/7")}, {q("49/24")}});
  CHECK(spectral_quotient(r.graph) == build_phi(three_edge_example()).phi);
}

TEST_CASE("validation failures") {
  PendantInverseInput in = three_edge_example();
  in.neumann = Spectrum::from_values({{q("1"), 1}, {q("3/2"), 1}, {q("2"), 1}});
  ValidationReport r = validate_pendant(in);
  CHECK(!r.valid);
  CHECK(r.violations[0].condition == "1");

  // Shared value 2 where the tail does not vanish.
  in = three_edge_example();
  in.dirichlet = Spectrum::from_values({{q("1"), 1}, {q("2"), 1}, {q("9/4"), 1}});
  r = validate_pendant(in);
  CHECK(!r.valid);
  REQUIRE(!r.violations.empty());
  CHECK(r.violations[0].condition == "3");
  CHECK(r.violations[0].message.find("tail value") != std::string::npos);
  CHECK(code_of([&] { reconstruct_pendant(in); }) == ErrorCode::Invariant);

  // Multiplicity above q-1.
  in = three_edge_example();
  in.lengths = {q("3")};
  CHECK(!validate_pendant(in).valid);

  in = three_edge_example();
  in.dirichlet = Spectrum::from_values({{q("1"), 1}});
  CHECK(!validate_pendant(in).valid);
}

TEST_CASE("main edge recovered exactly from random pendant graphs") {
  gen::Rng rng(4242);
  for (int i = 0; i < 40; ++i) {
    gen::GraphShape shape;
    shape.duplicate = i % 4 == 0;
    StarGraph g = gen::pendant_graph(rng, shape);
    PendantInverseInput in = from_graph(g);
    ValidationReport rep = validate_pendant(in);
    INFO(serialize_graph(g), rep.to_json().dump());
    REQUIRE(rep.valid);
    PendantReconstruction r = reconstruct_pendant(in);
    CHECK(*r.graph.main_edge == *g.main_edge);
    CHECK(r.graph.central_mass == g.central_mass);
    CHECK(spectral_quotient(r.graph) == spectral_quotient(g));
    SpectrumPair s = spectra_of(r.graph);
    CHECK(s.neumann == in.neumann);
    CHECK(s.dirichlet == in.dirichlet);
  }
}

TEST_CASE("strictly interlacing data always reconstruct") {
  gen::Rng rng(77);
  for (int i = 0; i < 30; ++i) {
    int n = static_cast<int>(gen::uniform(rng, 1, 4));
    std::vector<Rational> v = gen::distinct_positive(rng, 2 * n);
    PendantInverseInput in;
    std::vector<std::pair<Rational, int>> mu, lam;
    for (int k = 0; k < n; ++k) {
      mu.push_back({v[static_cast<std::size_t>(2 * k)], 1});
      lam.push_back({v[static_cast<std::size_t>(2 * k + 1)], 1});
    }
    in.neumann = Spectrum::from_values(mu);
    in.dirichlet = Spectrum::from_values(lam);
    in.lengths = {gen::positive(rng), gen::positive(rng)};
    in.main_length = 1;
    in.main_length = build_phi(in).gamma / 2;
    REQUIRE(validate_pendant(in).valid);
    PendantReconstruction r = reconstruct_pendant(in);
    CHECK(spectral_quotient(r.graph) == build_phi(in).phi);
  }
}
