#include "doctest.h"

#include <functional>

#include "graphs.hpp"
#include "starspec/error.hpp"
#include "starspec/serialize.hpp"

using namespace starspec;

namespace {
Rational q(const char* s) { return parse_rational(s); }

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

TEST_CASE("edge validation") {
  Edge ok{{q("1"), q("2")}, {q("3")}};
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.total_length() == 3);
  Edge counts{{q("1")}, {q("3")}};
  CHECK(code_of([&] { counts.validate(); }) == ErrorCode::Invariant);
  Edge neg{{q("1"), q("-2")}, {q("3")}};
  CHECK(code_of([&] { neg.validate(); }) == ErrorCode::Invariant);
  Edge zero_mass{{q("1"), q("2")}, {q("0")}};
  CHECK(code_of([&] { zero_mass.validate(); }) == ErrorCode::Invariant);
}

TEST_CASE("graph shape rules") {
  StarGraph g;
  g.edges = {Edge{{q("1")}, {}}};
  CHECK(code_of([&] { g.validate(); }) == ErrorCode::Invariant);
  g.edges.push_back(Edge{{q("1"), q("1")}, {q("1")}});
  CHECK_NOTHROW(g.validate());
  CHECK(g.q() == 2);
  CHECK(g.total_masses() == 1);
  g.central_mass = q("-1");
  CHECK(code_of([&] { g.validate(); }) == ErrorCode::Invariant);
  g.central_mass = 0;
  g.root = RootPlacement::Pendant;
  CHECK(code_of([&] { g.validate(); }) == ErrorCode::Invariant);
  g.main_edge = Edge{{q("1")}, {}};
  CHECK_NOTHROW(g.validate());
  CHECK(g.q() == 3);
}

TEST_CASE("spectrum from values and polynomial") {
  Spectrum s = Spectrum::from_values({{q("2"), 2}, {q("1"), 1}});
  CHECK(s.count() == 3);
  CHECK(s.poly() == Polynomial::from_roots({q("1"), q("2"), q("2")}));
  REQUIRE(s.roots().size() == 2);
  CHECK(s.roots()[1].multiplicity == 2);
  CHECK(s.all_rational());
  auto vals = s.rational_values();
  CHECK(vals == std::vector<std::pair<Rational, int>>{{q("1"), 1}, {q("2"), 2}});
  CHECK(s.occurrences().size() == 3);

  Spectrum irr = Spectrum::from_polynomial(Polynomial{q("2"), q("-4"), q("1")});
  CHECK(!irr.all_rational());
  CHECK(code_of([&] { irr.rational_values(); }) == ErrorCode::IrrationalPole);
  CHECK(code_of([] { Spectrum::from_polynomial(Polynomial{q("1"), q("0"), q("1")}); }) == ErrorCode::Invariant);
  CHECK(code_of([] { Spectrum::from_values({{q("-1"), 1}}); }) == ErrorCode::Invariant);
}

TEST_CASE("graph json round trip") {
  gen::Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    StarGraph g = i % 2 ? gen::center_graph(rng) : gen::pendant_graph(rng);
    std::string text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
  }
}

TEST_CASE("graph json accepted forms") {
  StarGraph g = parse_graph(R"({"graph": {"root": "centre", "edges": [
      {"lengths": ["1/2", 1], "masses": ["0.25"]}, {"lengths": [2], "masses": []}]}})");
  CHECK(g.root == RootPlacement::Center);
  CHECK(g.central_mass == 0);
  CHECK(g.edges[0].lengths[0] == q("1/2"));
  CHECK(g.edges[0].masses[0] == q("1/4"));
  CHECK(code_of([] { parse_graph(R"({"root": "middle", "edges": []})"); }) == ErrorCode::Schema);
  CHECK(code_of([] { parse_graph(R"({"root": "center"})"); }) == ErrorCode::Schema);
  CHECK(code_of([] { parse_graph("{not json"); }) == ErrorCode::Schema);
  CHECK(code_of([] { parse_graph(R"({"root": "center", "edges": [{"lengths": ["1"], "masses": ["1"]}, {"lengths": ["1"], "masses": []}]})"); }) ==
        ErrorCode::Invariant);
}

TEST_CASE("spectra json") {
  SpectrumPair p = parse_spectra(R"({"neumann_squared": ["1/2", "3/2", "2"],
      "dirichlet_squared": [{"value": "1"}, {"value": "2", "mult": 2}]})");
  CHECK(p.neumann.poly() == Polynomial::from_roots({q("1/2"), q("3/2"), q("2")}));
  CHECK(p.dirichlet.poly() == Polynomial::from_roots({q("1"), q("2"), q("2")}));
  SpectrumPair back = parse_spectra(serialize_spectra(p));
  CHECK(back.neumann == p.neumann);
  CHECK(back.dirichlet == p.dirichlet);

  SpectrumPair irr{Spectrum::from_polynomial(Polynomial{q("2"), q("-4"), q("1")}), Spectrum::from_values({{q("1"), 1}})};
  Json j = to_json(irr);
  CHECK(j.contains("neumann_poly"));
  CHECK(!j.contains("dirichlet_poly"));
  CHECK(j["neumann_squared"][0].contains("interval"));
  SpectrumPair irr_back = spectra_from_json(j);
  CHECK(irr_back.neumann == irr.neumann);

  OutputOptions opt;
  opt.digits = 8;
  opt.frequencies = true;
  Json a = to_json(irr, opt);
  CHECK(a.contains("approximate_fields"));
  CHECK(a["dirichlet_squared"][0]["frequencies_approx"].size() == 2);
}

TEST_CASE("interval output honours the refinement width") {
  Polynomial p{q("2"), q("-4"), q("1")};
  Spectrum s = Spectrum::from_polynomial(p);
  OutputOptions opt;
  opt.refine_width = q("1/1000");
  Json j = to_json(s, opt);
  Rational lo = parse_rational(j[0]["interval"][0].get<std::string>());
  Rational hi = parse_rational(j[0]["interval"][1].get<std::string>());
  CHECK(hi - lo <= q("1/1000"));
  CHECK(sgn(p(lo)) * sgn(p(hi)) < 0);
}

TEST_CASE("decimal strings keep leading zeros in base ten") {
  CHECK(q("0.25") == q("1/4"));
  CHECK(q("010") == 10);
  CHECK(q("07/09") == q("7/9"));
}

TEST_CASE("plan json") {
  ReconstructionPlan p = parse_plan(R"({"partition": [[0], [0, 1]], "residue_split": {"2": ["2/3", "1/3"]}})");
  REQUIRE(p.partition);
  CHECK((*p.partition)[1] == std::vector<int>{0, 1});
  CHECK(p.residue_split.at(q("2")) == std::vector<Rational>{q("2/3"), q("1/3")});
  CHECK(parse_plan(dump(to_json(p))).residue_split == p.residue_split);
  CHECK(parse_plan("{}").empty());
  CHECK(code_of([] { parse_plan(R"({"residue_split": {"x": ["1"]}})"); }) == ErrorCode::Schema);
}
