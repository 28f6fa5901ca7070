#pragma once

#include <iosfwd>
#include <string>

namespace torusphase::cli {

/// Parsed command-line configuration. Defaults are chosen so every command
/// runs meaningfully with no flags beyond the subcommand.
struct RunConfig {
  std::string command;
  double a = 1.0;  // torus minor radius; sphere radius for --surface sphere
  double b = 2.0;  // torus major radius
  double alpha = 1.0;
  double beta = 2.0;
  double mu = 1.0;
  int grid_n = 64;
  int ode_steps = 4096;
  int quad_steps = 1024;
  double total_time = 100.0;
  double psi0 = 0.0;
  bool psi0_given = false;  // holonomy only: absent --psi0 selects sweep mode
  std::string surface = "torus";
  std::string format = "csv";
  unsigned long long seed = 1;
  std::string out_path;  // empty: write to stdout
};

/// Output document plus exit status for one command invocation.
struct CommandResult {
  std::string output;
  std::string diagnostic;  // single line for stderr when exit_code != 0
  int exit_code = 0;       // 0 ok, 2 bad arguments, 3 numerical failure
};

CommandResult cmd_curvature(const RunConfig& cfg);
CommandResult cmd_gauss_bonnet(const RunConfig& cfg);
CommandResult cmd_holonomy(const RunConfig& cfg);
CommandResult cmd_transport(const RunConfig& cfg);
CommandResult cmd_gauge_check(const RunConfig& cfg);
CommandResult cmd_berry(const RunConfig& cfg);
CommandResult cmd_compare(const RunConfig& cfg);

/// Dispatches on cfg.command; module errors surface as exit code 3.
CommandResult run_command(const RunConfig& cfg);

/// Full CLI entry point: parses argv, runs the command, writes the output
/// document to `out` (or the --out file) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torusphase::cli
