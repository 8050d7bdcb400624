#pragma once

#include <string>

#include "json.hpp"
#include "starspec/cfrac.hpp"
#include "starspec/model.hpp"

namespace starspec {

using Json = nlohmann::ordered_json;

struct OutputOptions {
  int digits = 0;               // > 0 adds approximate decimals
  bool frequencies = false;     // add +-sqrt(z) approximations
  Rational refine_width = default_budget();
};

Json to_json(const Rational& q);
Json to_json(const Polynomial& p);
Json to_json(const Edge& e);
Json to_json(const StarGraph& g);
Json to_json(const StieltjesCF& c);
Json to_json(const ReconstructionPlan& plan);
Json to_json(const RealRoot& r, const OutputOptions& opt = {});
Json to_json(const Spectrum& s, const OutputOptions& opt = {});
Json to_json(const SpectrumPair& s, const OutputOptions& opt = {});

/// Rationals may be given as strings ("1/2", "0.5", "3") or JSON integers.
Rational rational_from_json(const Json& j, const std::string& where);
Polynomial polynomial_from_json(const Json& j, const std::string& where);
Edge edge_from_json(const Json& j, const std::string& where);
StarGraph graph_from_json(const Json& j);
SpectrumPair spectra_from_json(const Json& j);
ReconstructionPlan plan_from_json(const Json& j);
StieltjesCF cf_from_json(const Json& j);

/// Text entry points. Malformed documents raise E_SCHEMA, broken type
/// invariants E_INVARIANT.
Json parse_json_text(const std::string& text);
StarGraph parse_graph(const std::string& text);
SpectrumPair parse_spectra(const std::string& text);
ReconstructionPlan parse_plan(const std::string& text);
std::string serialize_graph(const StarGraph& g);
std::string serialize_spectra(const SpectrumPair& s, const OutputOptions& opt = {});

/// Canonical text form used for every file we write: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace starspec
