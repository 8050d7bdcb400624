#include <iostream>

#include "CLI11.hpp"
#include "starspec/cli.hpp"
#include "starspec/serialize.hpp"

int main(int argc, char** argv) {
  using starspec::Command;
  CLI::App app{"Spectral problems on star graphs of Stieltjes strings"};
  app.require_subcommand(1);

  starspec::JobConfig config;
  std::string main_length;

  struct Sub {
    Command command;
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {Command::Forward, "forward", "Spectra of a graph"},
      {Command::InverseCenter, "inverse-center", "Centre-rooted star from two spectra and edge lengths"},
      {Command::InversePendant, "inverse-pendant", "Pendant-rooted star from two spectra, main length and edge lengths"},
      {Command::Validate, "validate", "Check the solvability conditions of spectral data"},
      {Command::VerifyRoundtrip, "verify-roundtrip", "Compose forward and inverse and compare spectral quotients"},
      {Command::Matrix, "matrix", "Stiffness/mass pencil and interlacing certificate"},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--graph", config.graph_path, "Graph JSON file or directory")->check(CLI::ExistingPath);
    sub->add_option("--spectra", config.spectra_path, "Spectra JSON file or directory")->check(CLI::ExistingPath);
    sub->add_option("--plan", config.plan_path, "Reconstruction plan JSON")->check(CLI::ExistingFile);
    sub->add_option("--main-length", main_length, "Main edge length (pendant root)");
    sub->add_option("--lengths", config.lengths, "Edge lengths, comma separated")->delimiter(',');
    sub->add_option("--out", config.out_path, "Output file (directory in batch mode)");
    sub->add_flag("--emit-polys", config.emit_polys, "Include characteristic polynomials");
    sub->add_flag("--enumerate", config.enumerate, "Export the non-uniqueness constraints");
    sub->add_flag("--as-frequencies", config.as_frequencies, "Add approximate +-sqrt frequencies");
    sub->add_option("--digits", config.digits, "Add approximate decimals with this many digits");
    sub->add_option("--refine-width", config.refine_width, "Isolating interval width, default 2^-64");
    sub->add_option("--jobs", config.jobs, "Batch workers (0: one per core)");
    sub->callback([&config, c = s.command] { config.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << starspec::dump(starspec::Json{{"error", {{"code", "E_USAGE"}, {"message", e.what()}}}});
    return starspec::exit_code::error;
  }
  if (!main_length.empty()) config.main_length = main_length;
  return starspec::run(config, std::cout, std::cerr);
}
