#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "starspec/cfrac.hpp"
#include "starspec/cli.hpp"
#include "starspec/error.hpp"
#include "starspec/forward.hpp"
#include "starspec/serialize.hpp"

namespace py = pybind11;
using namespace starspec;

namespace {

using Strings = std::vector<std::string>;

std::vector<Rational> rationals(const Strings& s) {
  std::vector<Rational> out;
  out.reserve(s.size());
  for (const std::string& x : s) out.push_back(parse_rational(x));
  return out;
}

Strings strings(const std::vector<Rational>& v) {
  Strings out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(to_string(x));
  return out;
}

py::tuple job(const std::string& command, const std::string& graph, const std::string& spectra,
              const std::string& plan, std::optional<std::string> main_length, const Strings& lengths,
              bool emit_polys, bool enumerate, bool as_frequencies, int digits, const std::string& refine_width) {
  std::optional<Command> c = parse_command(command);
  if (!c) throw Error(ErrorCode::InvalidArgument, "unknown command: " + command);
  JobConfig cfg;
  cfg.command = *c;
  cfg.main_length = std::move(main_length);
  cfg.lengths = lengths;
  cfg.emit_polys = emit_polys;
  cfg.enumerate = enumerate;
  cfg.as_frequencies = as_frequencies;
  cfg.digits = digits;
  cfg.refine_width = refine_width;
  JobResult r;
  {
    py::gil_scoped_release release;
    r = run_job(cfg, {graph, spectra, plan});
  }
  return py::make_tuple(r.status, r.output, r.error);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spectral computations on star graphs of Stieltjes strings";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result([&] { return py::exception<Error>(m, "StarspecError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error.get_stored();
      py::object exc = type(e.what());
      exc.attr("code") = std::string(code_name(e.code()));
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  m.def("run_job", &job, py::arg("command"), py::arg("graph") = "", py::arg("spectra") = "",
        py::arg("plan") = "", py::arg("main_length") = py::none(), py::arg("lengths") = Strings{},
        py::arg("emit_polys") = false, py::arg("enumerate") = false, py::arg("as_frequencies") = false,
        py::arg("digits") = 0, py::arg("refine_width") = "",
        "Runs one CLI job on in-memory JSON documents. Returns (status, output, error).");

  m.def(
      "cf_expand",
      [](const Strings& num, const Strings& den) {
        StieltjesCF c = cf_expand(RationalFunction(Polynomial(rationals(num)), Polynomial(rationals(den))));
        return py::make_tuple(strings(c.a), strings(c.b));
      },
      py::arg("num"), py::arg("den"), "Stieltjes continued fraction (a, b) of num/den, coefficients low degree first.");

  m.def(
      "cf_to_ratfun",
      [](const Strings& a, const Strings& b) {
        RationalFunction f = cf_to_ratfun(StieltjesCF{rationals(a), rationals(b)});
        return py::make_tuple(strings(f.num().coefficients()), strings(f.den().coefficients()));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "spectra",
      [](const std::string& graph) { return serialize_spectra(spectra_of(parse_graph(graph))); },
      py::arg("graph"), "Spectra JSON of a graph JSON document.");
}
