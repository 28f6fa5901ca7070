#include "torusphase/cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace torusphase::cli {

namespace {

struct FlagSet {
  bool torus_shape = false;   // --a --b with b > a
  bool sphere_shape = false;  // --surface {torus|sphere}; --a doubles as radius
  bool field = false;         // --alpha --beta --mu with beta > alpha
  bool grid = false;
  bool ode = false;
  bool quad = false;
  bool time = false;
  bool psi0 = false;
  bool seed = false;
};

void add_flags(CLI::App* sub, RunConfig& cfg, const FlagSet& flags) {
  if (flags.torus_shape || flags.sphere_shape) {
    sub->add_option("--a", cfg.a, "minor radius (radius for --surface sphere)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--b", cfg.b, "major radius")->check(CLI::PositiveNumber);
  }
  if (flags.sphere_shape) {
    sub->add_option("--surface", cfg.surface, "surface to integrate over")
        ->check(CLI::IsMember({"torus", "sphere"}));
  }
  if (flags.field) {
    sub->add_option("--alpha", cfg.alpha, "field minor amplitude")->check(CLI::PositiveNumber);
    sub->add_option("--beta", cfg.beta, "field major amplitude")->check(CLI::PositiveNumber);
    sub->add_option("--mu", cfg.mu, "magnetic moment magnitude")->check(CLI::PositiveNumber);
  }
  if (flags.grid) {
    sub->add_option("--grid-n", cfg.grid_n, "grid resolution per angle")
        ->check(CLI::PositiveNumber);
  }
  if (flags.ode) {
    sub->add_option("--ode-steps", cfg.ode_steps, "fixed integrator step count")
        ->check(CLI::PositiveNumber);
  }
  if (flags.quad) {
    sub->add_option("--quad-steps", cfg.quad_steps, "quadrature sample count")
        ->check(CLI::PositiveNumber);
  }
  if (flags.time) {
    sub->add_option("--total-time", cfg.total_time, "loop traversal time")
        ->check(CLI::PositiveNumber);
  }
  if (flags.psi0) {
    sub->add_option("--psi0", cfg.psi0, "latitude angle in radians");
  }
  if (flags.seed) {
    sub->add_option("--seed", cfg.seed, "seed for the randomized sweep");
  }
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Torus connection, curvature, holonomy, Gauss-Bonnet topology and "
               "adiabatic spin evolution"};
  app.require_subcommand(1);

  auto* curvature = app.add_subcommand(
      "curvature", "tabulate K, the curvature two-form and the area element on a grid");
  add_flags(curvature, cfg, {.torus_shape = true, .grid = true});

  auto* gauss_bonnet = app.add_subcommand(
      "gauss-bonnet", "integrate K dsigma over a closed surface and report the genus");
  add_flags(gauss_bonnet, cfg, {.sphere_shape = true, .grid = true});

  auto* holonomy = app.add_subcommand(
      "holonomy", "holonomy of a latitude loop (or a sweep when --psi0 is omitted)");
  add_flags(holonomy, cfg, {.torus_shape = true, .grid = true, .quad = true, .psi0 = true});

  auto* transport = app.add_subcommand(
      "transport", "parallel-transport (1,0) around a latitude loop and compare "
                   "against the holonomy rotation");
  add_flags(transport, cfg,
            {.torus_shape = true, .ode = true, .quad = true, .psi0 = true});

  auto* gauge_check = app.add_subcommand(
      "gauge-check", "verify curvature and holonomy invariance under random smooth "
                     "gauge fields, plus the winding chi = theta shift");
  add_flags(gauge_check, cfg,
            {.torus_shape = true, .quad = true, .psi0 = true, .seed = true});

  auto* berry = app.add_subcommand(
      "berry", "Berry phase of a latitude loop: line integral, adiabatic evolution "
               "and the solid-angle cross-check");
  add_flags(berry, cfg,
            {.field = true, .ode = true, .quad = true, .time = true, .psi0 = true});

  auto* compare = app.add_subcommand(
      "compare", "print the torus transport holonomy and the spin Berry phase for the "
                 "same loop, side by side (they are distinct quantities)");
  add_flags(compare, cfg,
            {.torus_shape = true, .field = true, .quad = true, .psi0 = true});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  cfg.psi0_given = sub->count("--psi0") > 0;

  const bool needs_torus =
      cfg.command != "berry" && !(cfg.command == "gauss-bonnet" && cfg.surface == "sphere");
  if (needs_torus && !(cfg.b > cfg.a)) {
    err << "error: --b must be greater than --a\n";
    return 2;
  }
  if ((cfg.command == "berry" || cfg.command == "compare") && !(cfg.beta > cfg.alpha)) {
    err << "error: --beta must be greater than --alpha\n";
    return 2;
  }

  const CommandResult result = run_command(cfg);
  if (!result.output.empty()) {
    if (cfg.out_path.empty()) {
      out << result.output;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open --out file '" << cfg.out_path << "'\n";
        return 2;
      }
      file << result.output;
    }
  }
  if (!result.diagnostic.empty()) {
    err << result.diagnostic << "\n";
  }
  return result.exit_code;
}

}  // namespace torusphase::cli
