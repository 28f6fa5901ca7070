#include "torusphase/cli/run.hpp"

#include "torusphase/cli/format.hpp"
#include "torusphase/torusphase.hpp"

#include <json.hpp>

#include <array>
#include <random>
#include <utility>
#include <vector>

namespace torusphase::cli {

namespace {

using json = nlohmann::json;

// Ordered key/value record rendered as a one-row CSV table or a JSON object
// (nlohmann sorts object keys, so JSON output is schema-stable by itself).
class Record {
 public:
  void add(const std::string& key, double value) { fields_.emplace_back(key, json(value)); }
  void add(const std::string& key, int value) { fields_.emplace_back(key, json(value)); }
  void add(const std::string& key, bool value) { fields_.emplace_back(key, json(value)); }
  void add(const std::string& key, unsigned long long value) {
    fields_.emplace_back(key, json(value));
  }
  void add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, json(value));
  }

  const std::vector<std::pair<std::string, json>>& fields() const { return fields_; }

 private:
  std::vector<std::pair<std::string, json>> fields_;
};

std::string cell_text(const json& value) {
  if (value.is_number_float()) return fmt_double(value.get<double>());
  if (value.is_number_unsigned()) return std::to_string(value.get<unsigned long long>());
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  return value.get<std::string>();
}

std::string render_record(const Record& record, const std::string& format) {
  if (format == "json") {
    json obj = json::object();
    for (const auto& [key, value] : record.fields()) obj[key] = value;
    return obj.dump(2) + "\n";
  }
  std::vector<std::string> header, row;
  for (const auto& [key, value] : record.fields()) {
    header.push_back(key);
    row.push_back(cell_text(value));
  }
  CsvBuilder csv(std::move(header));
  csv.add_row(std::move(row));
  return csv.str();
}

std::string render_table(const std::vector<Record>& rows, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& record : rows) {
      json obj = json::object();
      for (const auto& [key, value] : record.fields()) obj[key] = value;
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }
  std::vector<std::string> header;
  for (const auto& [key, value] : rows.front().fields()) header.push_back(key);
  CsvBuilder csv(std::move(header));
  for (const auto& record : rows) {
    std::vector<std::string> row;
    for (const auto& [key, value] : record.fields()) row.push_back(cell_text(value));
    csv.add_row(std::move(row));
  }
  return csv.str();
}

// chi(theta, psi) as a degree-(1,1) trigonometric polynomial with the nine
// given coefficients; single valued and smooth, with analytic partials.
GaugeField<double> trig_gauge_field(const std::array<double, 9>& c) {
  return GaugeField<double>{
      [c](double th, double ps) {
        const double sth = std::sin(th), cth = std::cos(th);
        const double sps = std::sin(ps), cps = std::cos(ps);
        return c[0] + c[1] * sth + c[2] * cth + c[3] * sps + c[4] * cps +
               c[5] * sth * sps + c[6] * sth * cps + c[7] * cth * sps + c[8] * cth * cps;
      },
      [c](double th, double ps) {
        const double sth = std::sin(th), cth = std::cos(th);
        const double sps = std::sin(ps), cps = std::cos(ps);
        return c[1] * cth - c[2] * sth + c[5] * cth * sps + c[6] * cth * cps -
               c[7] * sth * sps - c[8] * sth * cps;
      },
      [c](double th, double ps) {
        const double sth = std::sin(th), cth = std::cos(th);
        const double sps = std::sin(ps), cps = std::cos(ps);
        return c[3] * cps - c[4] * sps + c[5] * sth * cps - c[6] * sth * sps +
               c[7] * cth * cps - c[8] * cth * sps;
      }};
}

ClosedPath<double> wavy_loop(double psi0, double amplitude) {
  return ClosedPath<double>(
      [](double t) { return two_pi<double> * t; },
      [psi0, amplitude](double t) { return psi0 + amplitude * std::sin(two_pi<double> * t); },
      [](double) { return two_pi<double>; },
      [amplitude](double t) {
        return amplitude * two_pi<double> * std::cos(two_pi<double> * t);
      },
      1, 0);
}

}  // namespace

CommandResult cmd_curvature(const RunConfig& cfg) {
  const TorusShaped shape(cfg.a, cfg.b);
  std::vector<Record> rows;
  rows.reserve(static_cast<std::size_t>(cfg.grid_n) * static_cast<std::size_t>(cfg.grid_n));
  const double h = two_pi<double> / cfg.grid_n;
  for (int i = 0; i < cfg.grid_n; ++i) {
    for (int j = 0; j < cfg.grid_n; ++j) {
      const ParamPointd p(h * i, h * j);
      Record row;
      row.add("theta", p.theta);
      row.add("psi", p.psi);
      row.add("K", gaussian_curvature(shape, p));
      row.add("F_theta_psi", curvature(p).f_theta_psi);
      row.add("dsigma", area_elements(shape, p).surface);
      rows.push_back(std::move(row));
    }
  }
  return {render_table(rows, cfg.format), "", 0};
}

CommandResult cmd_gauss_bonnet(const RunConfig& cfg) {
  const ClosedSurface<double> surface =
      cfg.surface == "sphere" ? sphere_surface(cfg.a) : torus_surface(TorusShaped(cfg.a, cfg.b));
  const TopologyReport<double> report = genus_of(surface, cfg.grid_n);
  Record record;
  record.add("surface", surface.name);
  record.add("grid_n", cfg.grid_n);
  record.add("total_curvature", report.total_curvature);
  record.add("genus_estimate", report.genus_estimate);
  record.add("genus", report.genus);
  record.add("converged", report.converged);
  CommandResult result{render_record(record, cfg.format), "", 0};
  if (!report.converged) {
    result.diagnostic = "error: genus estimate did not converge on this grid";
    result.exit_code = 3;
  }
  return result;
}

CommandResult cmd_holonomy(const RunConfig& cfg) {
  if (cfg.psi0_given) {
    const HolonomyResult<double> hol = holonomy(latitude_loop(cfg.psi0), cfg.quad_steps);
    Record record;
    record.add("psi0", cfg.psi0);
    record.add("gamma_raw", hol.gamma_raw);
    record.add("gamma_mod", hol.gamma_mod);
    record.add("rotation_00", hol.rotation(0, 0));
    record.add("rotation_01", hol.rotation(0, 1));
    record.add("rotation_10", hol.rotation(1, 0));
    record.add("rotation_11", hol.rotation(1, 1));
    return {render_record(record, cfg.format), "", 0};
  }
  // sweep mode: grid_n latitudes from 0 to pi/2, so sin(psi0) is monotone
  std::vector<Record> rows;
  for (int i = 0; i < cfg.grid_n; ++i) {
    const double psi0 =
        cfg.grid_n == 1 ? 0.0 : (pi<double> / 2) * static_cast<double>(i) / (cfg.grid_n - 1);
    const HolonomyResult<double> hol = holonomy(latitude_loop(psi0), cfg.quad_steps);
    Record row;
    row.add("psi0", psi0);
    row.add("sin_psi0", std::sin(psi0));
    row.add("gamma_raw", hol.gamma_raw);
    row.add("gamma_mod", hol.gamma_mod);
    rows.push_back(std::move(row));
  }
  return {render_table(rows, cfg.format), "", 0};
}

CommandResult cmd_transport(const RunConfig& cfg) {
  const ClosedPath<double> path = latitude_loop(cfg.psi0);
  const TangentVec<double> v0{1.0, 0.0};
  const HolonomyResult<double> hol = holonomy(path, cfg.quad_steps);
  const TangentVec<double> transported = parallel_transport(path, v0, cfg.ode_steps);
  const TangentVec<double> rotated = rotate_by_holonomy(hol.gamma_raw, v0);
  const double defect = std::max(std::abs(transported.v_theta - rotated.v_theta),
                                 std::abs(transported.v_psi - rotated.v_psi));
  Record record;
  record.add("psi0", cfg.psi0);
  record.add("ode_steps", cfg.ode_steps);
  record.add("quad_steps", cfg.quad_steps);
  record.add("v0_theta", v0.v_theta);
  record.add("v0_psi", v0.v_psi);
  record.add("transported_theta", transported.v_theta);
  record.add("transported_psi", transported.v_psi);
  record.add("gamma_raw", hol.gamma_raw);
  record.add("rotated_theta", rotated.v_theta);
  record.add("rotated_psi", rotated.v_psi);
  record.add("defect", defect);
  record.add("norm_drift", std::abs(transported.norm() - v0.norm()));
  return {render_record(record, cfg.format), "", 0};
}

CommandResult cmd_gauge_check(const RunConfig& cfg) {
  const int trials = 10;
  const int probe_points = 32;
  const ClosedPath<double> loop = wavy_loop(cfg.psi0, 0.4);
  const HolonomyResult<double> base = holonomy(loop, cfg.quad_steps);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> coeff(-0.5, 0.5);
  std::uniform_real_distribution<double> angle(0.0, two_pi<double>);

  double max_curvature_dev = 0.0;
  double max_holonomy_dev = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    std::array<double, 9> c{};
    for (double& x : c) x = coeff(rng);
    const GaugeField<double> chi = trig_gauge_field(c);
    const auto gauged = [&chi](const ParamPointd& p) {
      return gauge_transform_connection(p, chi);
    };
    for (int k = 0; k < probe_points; ++k) {
      const ParamPointd p(angle(rng), angle(rng));
      const double dev =
          std::abs(fd_exterior_derivative(gauged, p).f_theta_psi - curvature(p).f_theta_psi);
      max_curvature_dev = std::max(max_curvature_dev, dev);
    }
    const HolonomyResult<double> after = holonomy_after_gauge(loop, chi, cfg.quad_steps);
    max_holonomy_dev = std::max(max_holonomy_dev, std::abs(after.gamma_raw - base.gamma_raw));
  }

  // chi = theta winds once around the loop: gamma_raw shifts by one period
  const GaugeField<double> winding_chi{[](double th, double) { return th; },
                                       [](double, double) { return 1.0; },
                                       [](double, double) { return 0.0; }};
  const HolonomyResult<double> shifted = holonomy_after_gauge(loop, winding_chi, cfg.quad_steps);

  Record record;
  record.add("seed", cfg.seed);
  record.add("trials", trials);
  record.add("max_curvature_deviation", max_curvature_dev);
  record.add("max_holonomy_deviation", max_holonomy_dev);
  record.add("winding_shift_minus_two_pi",
             shifted.gamma_raw - base.gamma_raw - two_pi<double>);
  record.add("winding_mod_deviation",
             angle_distance(shifted.gamma_mod, base.gamma_mod));
  return {render_record(record, cfg.format), "", 0};
}

CommandResult cmd_berry(const RunConfig& cfg) {
  const FieldParams<double> params(cfg.alpha, cfg.beta, cfg.mu);
  const ClosedPath<double> path = latitude_loop(cfg.psi0);
  const BerryPhase<double> line = berry_phase_loop(params, path, cfg.quad_steps);
  const double omega = solid_angle_oracle(params, path, 8192);
  const EvolutionResult<double> evo =
      adiabatic_evolve(params, DriveSchedule<double>{path, cfg.total_time, cfg.ode_steps});
  Record record;
  record.add("psi0", cfg.psi0);
  record.add("alpha", cfg.alpha);
  record.add("beta", cfg.beta);
  record.add("mu", cfg.mu);
  record.add("total_time", cfg.total_time);
  record.add("quad_steps", cfg.quad_steps);
  record.add("ode_steps", cfg.ode_steps);
  record.add("berry_gamma_raw", line.gamma_raw);
  record.add("berry_gamma_mod", line.gamma_mod);
  record.add("adiabatic_geometric_phase", evo.report.geometric_phase);
  record.add("dynamical_phase", evo.report.dynamical_phase);
  record.add("total_phase", evo.report.total_phase);
  record.add("residual_nonadiabaticity", evo.report.residual_nonadiabaticity);
  record.add("adiabatic_warning", evo.report.adiabatic_warning);
  record.add("max_norm_deviation", evo.report.max_norm_deviation);
  record.add("solid_angle", omega);
  record.add("minus_half_solid_angle_mod", wrap_angle(-omega / 2));
  return {render_record(record, cfg.format), "", 0};
}

CommandResult cmd_compare(const RunConfig& cfg) {
  // Same (theta, psi) loop, two different geometric objects: the parallel
  // transport holonomy on the embedded torus and the spin Berry phase of the
  // torus-valued field. They are reported side by side, not equated.
  const ClosedPath<double> path = latitude_loop(cfg.psi0);
  const HolonomyResult<double> hol = holonomy(path, cfg.quad_steps);
  const FieldParams<double> params(cfg.alpha, cfg.beta, cfg.mu);
  const BerryPhase<double> line = berry_phase_loop(params, path, cfg.quad_steps);
  const double omega = solid_angle_oracle(params, path, 8192);
  Record record;
  record.add("psi0", cfg.psi0);
  record.add("a", cfg.a);
  record.add("b", cfg.b);
  record.add("alpha", cfg.alpha);
  record.add("beta", cfg.beta);
  record.add("mu", cfg.mu);
  record.add("torus_holonomy_gamma_raw", hol.gamma_raw);
  record.add("torus_holonomy_gamma_mod", hol.gamma_mod);
  record.add("spin_berry_phase_raw", line.gamma_raw);
  record.add("spin_berry_phase_mod", line.gamma_mod);
  record.add("spin_solid_angle", omega);
  return {render_record(record, cfg.format), "", 0};
}

CommandResult run_command(const RunConfig& cfg) {
  try {
    if (cfg.command == "curvature") return cmd_curvature(cfg);
    if (cfg.command == "gauss-bonnet") return cmd_gauss_bonnet(cfg);
    if (cfg.command == "holonomy") return cmd_holonomy(cfg);
    if (cfg.command == "transport") return cmd_transport(cfg);
    if (cfg.command == "gauge-check") return cmd_gauge_check(cfg);
    if (cfg.command == "berry") return cmd_berry(cfg);
    if (cfg.command == "compare") return cmd_compare(cfg);
    return {"", "error: unknown command '" + cfg.command + "'", 2};
  } catch (const std::exception& e) {
    return {"", std::string("error: ") + e.what(), 3};
  }
}

}  // namespace torusphase::cli
