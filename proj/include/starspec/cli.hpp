#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "starspec/rational.hpp"
#include "starspec/roots.hpp"

namespace starspec {

enum class Command { Forward, InverseCenter, InversePendant, Validate, VerifyRoundtrip, Matrix };

struct JobConfig {
  Command command = Command::Forward;
  std::string graph_path;
  std::string spectra_path;
  std::string plan_path;
  std::string out_path;  // empty: standard output
  std::optional<std::string> main_length;
  std::vector<std::string> lengths;
  bool emit_polys = false;
  bool enumerate = false;
  bool as_frequencies = false;
  int digits = 0;
  std::string refine_width;  // empty: 2^-64
  int jobs = 0;              // batch workers, 0: hardware concurrency
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int error = 1;
inline constexpr int invalid = 2;
}  // namespace exit_code

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);

/// Runs one job, or a batch when the primary input path is a directory (every
/// *.json inside is processed independently and written to out_path/<name>).
/// Results go to out_path or `out`; errors are JSON on `err`.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Same for in-memory inputs: the document texts stand in for the files.
struct JobInputs {
  std::string graph;
  std::string spectra;
  std::string plan;
};
struct JobResult {
  int status = exit_code::ok;
  std::string output;
  std::string error;
};
JobResult run_job(const JobConfig& config, const JobInputs& inputs);

}  // namespace starspec
