#include "starspec/serialize.hpp"

#include "starspec/error.hpp"

namespace starspec {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Schema, where + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

int int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return j.get<int>();
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& where) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < require_array(j, where).size(); ++i)
    out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json approx_value(const RealRoot& r, const OutputOptions& opt) {
  Rational tight(1);
  for (int i = 0; i < opt.digits + 3; ++i) tight /= 10;
  RealRoot t = r.is_exact() ? r : refine_root(r.witness, r, tight);
  return to_decimal(t.midpoint(), opt.digits);
}

Json frequencies(const RealRoot& r, const OutputOptions& opt) {
  int digits = opt.digits > 0 ? opt.digits : 12;
  Rational tight(1);
  for (int i = 0; i < 2 * digits + 4; ++i) tight /= 10;
  RealRoot t = r.is_exact() ? r : refine_root(r.witness, r, tight);
  std::string s = sqrt_decimal(t.midpoint(), digits);
  return Json::array({"-" + s, s});
}

Spectrum spectrum_from_json(const Json& doc, const std::string& side) {
  std::string poly_key = side + "_poly";
  std::string list_key = side + "_squared";
  if (doc.contains(poly_key)) {
    Polynomial p = polynomial_from_json(doc[poly_key], poly_key);
    if (p.is_zero()) schema(poly_key, "zero polynomial");
    return Spectrum::from_polynomial(p);
  }
  const Json& list = require_array(require(doc, list_key.c_str(), "spectra"), list_key);
  std::vector<std::pair<Rational, int>> values;
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string where = list_key + "[" + std::to_string(i) + "]";
    const Json& e = list[i];
    if (e.is_string() || e.is_number()) {
      values.emplace_back(rational_from_json(e, where), 1);
      continue;
    }
    if (!e.is_object()) schema(where, "expected an object or a rational");
    if (!e.contains("value")) schema(where, "irrational entries need the '" + poly_key + "' field");
    int mult = e.contains("mult") ? int_from_json(e["mult"], where + ".mult") : 1;
    values.emplace_back(rational_from_json(e["value"], where + ".value"), mult);
  }
  return Spectrum::from_values(values);
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const Rational& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

Json to_json(const Edge& e) {
  Json l = Json::array(), m = Json::array();
  for (const Rational& x : e.lengths) l.push_back(to_string(x));
  for (const Rational& x : e.masses) m.push_back(to_string(x));
  return Json{{"lengths", l}, {"masses", m}};
}

Json to_json(const StarGraph& g) {
  Json j;
  j["root"] = g.root == RootPlacement::Center ? "center" : "pendant";
  j["central_mass"] = to_string(g.central_mass);
  if (g.main_edge) j["main_edge"] = to_json(*g.main_edge);
  Json edges = Json::array();
  for (const Edge& e : g.edges) edges.push_back(to_json(e));
  j["edges"] = edges;
  return j;
}

Json to_json(const StieltjesCF& c) {
  Json a = Json::array(), b = Json::array();
  for (const Rational& x : c.a) a.push_back(to_string(x));
  for (const Rational& x : c.b) b.push_back(to_string(x));
  return Json{{"a", a}, {"b", b}};
}

Json to_json(const ReconstructionPlan& plan) {
  Json j = Json::object();
  if (plan.partition) j["partition"] = *plan.partition;
  if (!plan.residue_split.empty()) {
    Json s = Json::object();
    for (const auto& [v, fr] : plan.residue_split) {
      Json a = Json::array();
      for (const Rational& x : fr) a.push_back(to_string(x));
      s[to_string(v)] = a;
    }
    j["residue_split"] = s;
  }
  return j;
}

Json to_json(const RealRoot& r, const OutputOptions& opt) {
  Json j;
  if (r.is_exact()) {
    j["value"] = to_string(r.value());
  } else {
    RealRoot t = r.width() > opt.refine_width ? refine_root(r.witness, r, opt.refine_width) : r;
    if (t.is_exact())
      j["value"] = to_string(t.value());
    else
      j["interval"] = Json::array({to_string(t.lo), to_string(t.hi)});
  }
  j["mult"] = r.multiplicity;
  if (opt.digits > 0) j["approx"] = approx_value(r, opt);
  if (opt.frequencies) j["frequencies_approx"] = frequencies(r, opt);
  return j;
}

Json to_json(const Spectrum& s, const OutputOptions& opt) {
  Json a = Json::array();
  for (const RealRoot& r : s.roots()) a.push_back(to_json(r, opt));
  return a;
}

Json to_json(const SpectrumPair& s, const OutputOptions& opt) {
  Json j;
  j["neumann_squared"] = to_json(s.neumann, opt);
  j["dirichlet_squared"] = to_json(s.dirichlet, opt);
  if (!s.neumann.all_rational()) j["neumann_poly"] = to_json(s.neumann.poly());
  if (!s.dirichlet.all_rational()) j["dirichlet_poly"] = to_json(s.dirichlet.poly());
  if (opt.digits > 0 || opt.frequencies) j["approximate_fields"] = "approx and frequencies_approx are rounded decimals";
  return j;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    if (j.is_number_float()) return parse_rational(j.dump());
  } catch (const Error& e) {
    schema(where, e.what());
  }
  schema(where, "expected a rational string or number");
}

Polynomial polynomial_from_json(const Json& j, const std::string& where) {
  return Polynomial(rationals_from_json(j, where));
}

Edge edge_from_json(const Json& j, const std::string& where) {
  Edge e;
  e.lengths = rationals_from_json(require(j, "lengths", where), where + ".lengths");
  e.masses = rationals_from_json(require(j, "masses", where), where + ".masses");
  e.validate(where);
  return e;
}

StarGraph graph_from_json(const Json& doc) {
  const Json& j = doc.is_object() && doc.contains("graph") ? doc["graph"] : doc;
  StarGraph g;
  const Json& root = require(j, "root", "graph");
  if (!root.is_string()) schema("graph.root", "expected \"center\" or \"pendant\"");
  std::string r = root.get<std::string>();
  if (r == "center" || r == "centre")
    g.root = RootPlacement::Center;
  else if (r == "pendant")
    g.root = RootPlacement::Pendant;
  else
    schema("graph.root", "expected \"center\" or \"pendant\", got \"" + r + "\"");
  g.central_mass = j.contains("central_mass") ? rational_from_json(j["central_mass"], "graph.central_mass") : Rational(0);
  if (j.contains("main_edge") && !j["main_edge"].is_null()) g.main_edge = edge_from_json(j["main_edge"], "main_edge");
  const Json& edges = require_array(require(j, "edges", "graph"), "graph.edges");
  for (std::size_t i = 0; i < edges.size(); ++i) g.edges.push_back(edge_from_json(edges[i], "edges[" + std::to_string(i) + "]"));
  g.validate();
  return g;
}

SpectrumPair spectra_from_json(const Json& j) {
  if (!j.is_object()) schema("spectra", "expected an object");
  return {spectrum_from_json(j, "neumann"), spectrum_from_json(j, "dirichlet")};
}

ReconstructionPlan plan_from_json(const Json& j) {
  if (!j.is_object()) schema("plan", "expected an object");
  ReconstructionPlan plan;
  if (j.contains("partition") && !j["partition"].is_null()) {
    const Json& p = require_array(j["partition"], "plan.partition");
    std::vector<std::vector<int>> part;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::string where = "plan.partition[" + std::to_string(i) + "]";
      std::vector<int> row;
      for (std::size_t k = 0; k < require_array(p[i], where).size(); ++k)
        row.push_back(int_from_json(p[i][k], where + "[" + std::to_string(k) + "]"));
      part.push_back(row);
    }
    plan.partition = part;
  }
  if (j.contains("residue_split") && !j["residue_split"].is_null()) {
    const Json& s = j["residue_split"];
    if (!s.is_object()) schema("plan.residue_split", "expected an object");
    for (auto it = s.begin(); it != s.end(); ++it) {
      std::string where = "plan.residue_split[\"" + it.key() + "\"]";
      Rational key;
      try {
        key = parse_rational(it.key());
      } catch (const Error& e) {
        schema(where, e.what());
      }
      plan.residue_split[key] = rationals_from_json(it.value(), where);
    }
  }
  return plan;
}

StieltjesCF cf_from_json(const Json& j) {
  StieltjesCF c;
  c.a = rationals_from_json(require(j, "a", "cf"), "cf.a");
  c.b = rationals_from_json(require(j, "b", "cf"), "cf.b");
  if (c.a.size() != c.b.size() + 1) throw Error(ErrorCode::Invariant, "cf: |a| must equal |b| + 1");
  return c;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Schema, std::string("malformed JSON: ") + e.what());
  }
}

StarGraph parse_graph(const std::string& text) { return graph_from_json(parse_json_text(text)); }
SpectrumPair parse_spectra(const std::string& text) { return spectra_from_json(parse_json_text(text)); }
ReconstructionPlan parse_plan(const std::string& text) { return plan_from_json(parse_json_text(text)); }

std::string serialize_graph(const StarGraph& g) { return dump(to_json(g)); }
std::string serialize_spectra(const SpectrumPair& s, const OutputOptions& opt) { return dump(to_json(s, opt)); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace starspec
