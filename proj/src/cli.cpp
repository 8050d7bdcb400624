#include "starspec/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>

#include "starspec/error.hpp"
#include "starspec/inverse_pendant.hpp"
#include "starspec/matrixize.hpp"

namespace starspec {

namespace fs = std::filesystem;

namespace {

const std::pair<Command, const char*> kCommands[] = {
    {Command::Forward, "forward"},   {Command::InverseCenter, "inverse-center"},     {Command::InversePendant, "inverse-pendant"},
    {Command::Validate, "validate"}, {Command::VerifyRoundtrip, "verify-roundtrip"}, {Command::Matrix, "matrix"},
};

Json ratfun_json(const RationalFunction& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json error_json(std::string_view code, const std::string& message) {
  return Json{{"error", Json{{"code", std::string(code)}, {"message", message}}}};
}

OutputOptions output_options(const JobConfig& c) {
  OutputOptions opt;
  if (c.digits < 0) throw Error(ErrorCode::InvalidArgument, "--digits must be nonnegative");
  opt.digits = c.digits;
  opt.frequencies = c.as_frequencies;
  if (opt.frequencies && opt.digits == 0) opt.digits = 12;
  if (!c.refine_width.empty()) {
    opt.refine_width = parse_rational(c.refine_width);
    if (sgn(opt.refine_width) <= 0) throw Error(ErrorCode::InvalidArgument, "--refine-width must be positive");
  }
  return opt;
}

Json require_doc(const std::string& text, const char* what) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing --") + what + " input");
  return parse_json_text(text);
}

std::vector<Rational> resolve_lengths(const JobConfig& c, const Json& spectra_doc) {
  std::vector<Rational> out;
  if (!c.lengths.empty()) {
    for (const std::string& s : c.lengths) out.push_back(parse_rational(s));
  } else if (spectra_doc.is_object() && spectra_doc.contains("lengths")) {
    const Json& a = spectra_doc["lengths"];
    if (!a.is_array()) throw Error(ErrorCode::Schema, "lengths: expected an array");
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rational_from_json(a[i], "lengths[" + std::to_string(i) + "]"));
  } else {
    throw Error(ErrorCode::InvalidArgument, "edge lengths are required (--lengths or a \"lengths\" field)");
  }
  return out;
}

std::optional<Rational> resolve_main_length(const JobConfig& c, const Json& spectra_doc) {
  if (c.main_length) return parse_rational(*c.main_length);
  if (spectra_doc.is_object() && spectra_doc.contains("main_length")) return rational_from_json(spectra_doc["main_length"], "main_length");
  return std::nullopt;
}

ReconstructionPlan resolve_plan(const std::string& text) { return text.empty() ? ReconstructionPlan{} : parse_plan(text); }

std::vector<Rational> edge_lengths(const StarGraph& g) {
  std::vector<Rational> out;
  for (const Edge& e : g.edges) out.push_back(e.total_length());
  return out;
}

Json lengths_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& x : v) a.push_back(to_string(x));
  return a;
}

// --- commands ---------------------------------------------------------------

Json forward_doc(const StarGraph& g, const JobConfig& c, const OutputOptions& opt) {
  Json j;
  j["root"] = g.root == RootPlacement::Center ? "center" : "pendant";
  Json s = to_json(spectra_of(g), opt);
  for (auto it = s.begin(); it != s.end(); ++it) j[it.key()] = it.value();
  if (g.main_edge) j["main_length"] = to_string(g.main_edge->total_length());
  j["lengths"] = lengths_json(edge_lengths(g));
  if (c.emit_polys) {
    if (g.root == RootPlacement::Center) {
      CenterPolys p = char_polys_center(g);
      j["char_polys"] = Json{{"phi_N", to_json(p.phi_N)}, {"phi_D", to_json(p.phi_D)}};
    } else {
      PendantPolys p = char_polys_pendant(g);
      j["char_polys"] = Json{{"phi_l0", to_json(p.phi_l0)}, {"phi_inf", to_json(p.phi_inf)}};
    }
  }
  return j;
}

CenterInverseInput center_input(const JobConfig& c, const JobInputs& in) {
  Json doc = require_doc(in.spectra, "spectra");
  SpectrumPair s = spectra_from_json(doc);
  CenterInverseInput out;
  out.neumann = s.neumann;
  out.dirichlet = s.dirichlet;
  out.lengths = resolve_lengths(c, doc);
  out.plan = resolve_plan(in.plan);
  return out;
}

PendantInverseInput pendant_input(const JobConfig& c, const JobInputs& in) {
  Json doc = require_doc(in.spectra, "spectra");
  SpectrumPair s = spectra_from_json(doc);
  PendantInverseInput out;
  out.neumann = s.neumann;
  out.dirichlet = s.dirichlet;
  std::optional<Rational> main = resolve_main_length(c, doc);
  if (!main) throw Error(ErrorCode::InvalidArgument, "the main edge length is required (--main-length or a \"main_length\" field)");
  out.main_length = *main;
  out.lengths = resolve_lengths(c, doc);
  out.plan = resolve_plan(in.plan);
  return out;
}

Json invalid_doc(const ValidationReport& rep) {
  Json j = rep.to_json();
  j["stage"] = "validation";
  return j;
}

JobResult inverse_center(const JobConfig& c, const JobInputs& in) {
  CenterInverseInput input = center_input(c, in);
  ValidationReport rep = validate_center(input);
  if (!rep.valid) return {exit_code::invalid, dump(invalid_doc(rep)), ""};
  CenterReconstruction r = reconstruct_center(input);
  Json j;
  j["graph"] = to_json(r.graph);
  j["plan_used"] = to_json(r.plan.as_plan());
  if (c.enumerate) j["constraints"] = enumerate_constraints(input);
  return {exit_code::ok, dump(j), ""};
}

JobResult inverse_pendant(const JobConfig& c, const JobInputs& in, const OutputOptions& opt) {
  PendantInverseInput input = pendant_input(c, in);
  ValidationReport rep = validate_pendant(input);
  if (!rep.valid) return {exit_code::invalid, dump(invalid_doc(rep)), ""};
  PendantReconstruction r = reconstruct_pendant(input);
  Json j;
  j["graph"] = to_json(r.graph);
  j["main_edge"] = Json{{"n", r.main.n_main},
                        {"massless", r.main.massless_main()},
                        {"a_n1", to_string(r.main.a_n1)},
                        {"tail", ratfun_json(r.main.tail)},
                        {"shared_values_poly", to_json(r.main.common)}};
  j["subgraph_spectra"] = to_json(r.subgraph_spectra, opt);
  j["plan_used"] = to_json(r.subgraph.plan.as_plan());
  if (c.enumerate) j["constraints"] = enumerate_constraints(subgraph_input(input, r.main));
  return {exit_code::ok, dump(j), ""};
}

JobResult validate(const JobConfig& c, const JobInputs& in) {
  Json doc = require_doc(in.spectra, "spectra");
  bool pendant = resolve_main_length(c, doc).has_value();
  Json j;
  ValidationReport rep = pendant ? validate_pendant(pendant_input(c, in)) : validate_center(center_input(c, in));
  j["root"] = pendant ? "pendant" : "center";
  Json body = rep.to_json();
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return {rep.valid ? exit_code::ok : exit_code::invalid, dump(j), ""};
}

StarGraph reconstruct_from(const StarGraph& g, const ReconstructionPlan& plan, ValidationReport& rep) {
  SpectrumPair s = spectra_of(g);
  if (g.root == RootPlacement::Center) {
    CenterInverseInput in{s.neumann, s.dirichlet, edge_lengths(g), plan, false};
    rep = validate_center(in);
    return rep.valid ? reconstruct_center(in).graph : StarGraph{};
  }
  PendantInverseInput in{s.neumann, s.dirichlet, g.main_edge->total_length(), edge_lengths(g), plan};
  rep = validate_pendant(in);
  return rep.valid ? reconstruct_pendant(in).graph : StarGraph{};
}

JobResult verify_roundtrip(const JobConfig& c, const JobInputs& in) {
  Json j;
  bool pass = false;
  if (!in.graph.empty()) {
    StarGraph g = parse_graph(in.graph);
    ValidationReport rep;
    StarGraph r = reconstruct_from(g, resolve_plan(in.plan), rep);
    j["direction"] = "forward-inverse-forward";
    j["root"] = g.root == RootPlacement::Center ? "center" : "pendant";
    if (!rep.valid) {
      j["verdict"] = "fail";
      j["validation"] = rep.to_json();
      return {exit_code::invalid, dump(j), ""};
    }
    RationalFunction before = spectral_quotient(g), after = spectral_quotient(r);
    pass = before == after;
    j["verdict"] = pass ? "pass" : "fail";
    j["quotient"] = ratfun_json(before);
    if (!pass) j["quotient_roundtrip"] = ratfun_json(after);
    if (g.main_edge) j["main_edge_identical"] = *g.main_edge == *r.main_edge;
    j["reconstructed"] = to_json(r);
  } else {
    Json doc = require_doc(in.spectra, "spectra");
    bool pendant = resolve_main_length(c, doc).has_value();
    j["direction"] = "inverse-forward";
    j["root"] = pendant ? "pendant" : "center";
    RationalFunction target;
    StarGraph r;
    if (pendant) {
      PendantInverseInput input = pendant_input(c, in);
      ValidationReport rep = validate_pendant(input);
      if (!rep.valid) {
        j["verdict"] = "fail";
        j["validation"] = rep.to_json();
        return {exit_code::invalid, dump(j), ""};
      }
      target = build_phi(input).phi;
      r = reconstruct_pendant(input).graph;
    } else {
      CenterInverseInput input = center_input(c, in);
      ValidationReport rep = validate_center(input);
      if (!rep.valid) {
        j["verdict"] = "fail";
        j["validation"] = rep.to_json();
        return {exit_code::invalid, dump(j), ""};
      }
      target = build_psi(input).reciprocal();
      r = reconstruct_center(input).graph;
    }
    RationalFunction got = spectral_quotient(r);
    pass = got == target;
    j["verdict"] = pass ? "pass" : "fail";
    j["quotient"] = ratfun_json(target);
    if (!pass) j["quotient_roundtrip"] = ratfun_json(got);
    j["reconstructed"] = to_json(r);
  }
  return {pass ? exit_code::ok : exit_code::invalid, dump(j), ""};
}

JobResult matrix(const JobInputs& in, const OutputOptions& opt) {
  StarGraph g = parse_graph(require_doc(in.graph, "graph").dump());
  Pencil p = build_pencil(g);
  check_pencil(p, g);
  CenterPolys c = char_polys_center(g);
  Polynomial full = pencil_det(p.L, p.mass), sub = principal_pencil_det(p);
  bool prop_n = full.monic() == c.phi_N.monic(), prop_d = sub.monic() == c.phi_D.monic();
  InterlacingCertificate cert = interlacing_certificate(p, opt.refine_width);
  Json j;
  j["matrix"] = to_json(p);
  j["det_full"] = to_json(full);
  j["det_principal"] = to_json(sub);
  j["proportional"] = Json{{"phi_N", prop_n}, {"phi_D", prop_d}};
  j["interlacing"] = cert.to_json(opt);
  bool ok = prop_n && prop_d && cert.passed;
  return {ok ? exit_code::ok : exit_code::invalid, dump(j), ""};
}

// --- files and batches ------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot write " + path.string());
  f << text;
}

// The input that may name a directory for batch processing.
std::string* primary_path(JobConfig& c) {
  switch (c.command) {
    case Command::Forward:
    case Command::Matrix:
      return &c.graph_path;
    case Command::VerifyRoundtrip:
      return c.graph_path.empty() ? &c.spectra_path : &c.graph_path;
    default:
      return &c.spectra_path;
  }
}

JobResult run_files(const JobConfig& c) {
  try {
    JobInputs in;
    if (!c.graph_path.empty()) in.graph = read_file(c.graph_path);
    if (!c.spectra_path.empty()) in.spectra = read_file(c.spectra_path);
    if (!c.plan_path.empty()) in.plan = read_file(c.plan_path);
    return run_job(c, in);
  } catch (const Error& e) {
    return {exit_code::error, "", dump(error_json(code_name(e.code()), e.what()))};
  }
}

int severity(int status) { return status == exit_code::error ? 2 : status == exit_code::invalid ? 1 : 0; }

int run_batch(const JobConfig& config, const fs::path& dir, std::ostream& out, std::ostream& err) {
  if (config.out_path.empty()) {
    err << dump(error_json("E_INVALID_ARGUMENT", "batch mode needs --out naming an output directory"));
    return exit_code::error;
  }
  fs::path out_dir(config.out_path);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    err << dump(error_json("E_IO", "cannot create " + out_dir.string()));
    return exit_code::error;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::size_t workers = config.jobs > 0 ? static_cast<std::size_t>(config.jobs) : std::max(1u, std::thread::hardware_concurrency());
  std::vector<JobResult> results(files.size());
  for (std::size_t start = 0; start < files.size(); start += workers) {
    std::vector<std::future<JobResult>> running;
    for (std::size_t i = start; i < std::min(files.size(), start + workers); ++i) {
      JobConfig one = config;
      *primary_path(one) = files[i].string();
      one.out_path.clear();
      running.push_back(std::async(std::launch::async, [one] { return run_files(one); }));
    }
    for (std::size_t k = 0; k < running.size(); ++k) results[start + k] = running[k].get();
  }

  int worst = exit_code::ok;
  Json summary = Json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const JobResult& r = results[i];
    std::string name = files[i].filename().string();
    if (!r.output.empty()) write_file(out_dir / name, r.output);
    if (!r.error.empty()) write_file(out_dir / (files[i].stem().string() + ".error.json"), r.error);
    summary.push_back(Json{{"input", name}, {"status", r.status}});
    if (severity(r.status) > severity(worst)) worst = r.status;
  }
  out << dump(Json{{"batch", summary}});
  return worst;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [c, n] : kCommands)
    if (name == n) return c;
  return std::nullopt;
}

std::string command_name(Command c) {
  for (const auto& [k, n] : kCommands)
    if (k == c) return n;
  return "?";
}

JobResult run_job(const JobConfig& c, const JobInputs& in) {
  try {
    OutputOptions opt = output_options(c);
    switch (c.command) {
      case Command::Forward:
        return {exit_code::ok, dump(forward_doc(parse_graph(require_doc(in.graph, "graph").dump()), c, opt)), ""};
      case Command::InverseCenter:
        return inverse_center(c, in);
      case Command::InversePendant:
        return inverse_pendant(c, in, opt);
      case Command::Validate:
        return validate(c, in);
      case Command::VerifyRoundtrip:
        if (in.graph.empty() && in.spectra.empty()) throw Error(ErrorCode::InvalidArgument, "verify-roundtrip needs --graph or --spectra");
        return verify_roundtrip(c, in);
      case Command::Matrix:
        return matrix(in, opt);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown command");
  } catch (const Error& e) {
    return {exit_code::error, "", dump(error_json(code_name(e.code()), e.what()))};
  } catch (const std::exception& e) {
    return {exit_code::error, "", dump(error_json("E_INTERNAL", e.what()))};
  }
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  JobConfig c = config;
  const std::string& primary = *primary_path(c);
  std::error_code ec;
  if (!primary.empty() && fs::is_directory(primary, ec)) return run_batch(c, primary, out, err);

  JobResult r = run_files(c);
  if (!r.error.empty()) err << r.error;
  if (!r.output.empty()) {
    if (c.out_path.empty()) {
      out << r.output;
    } else {
      try {
        write_file(c.out_path, r.output);
      } catch (const Error& e) {
        err << dump(error_json(code_name(e.code()), e.what()));
        return exit_code::error;
      }
    }
  }
  return r.status;
}

}  // namespace starspec
