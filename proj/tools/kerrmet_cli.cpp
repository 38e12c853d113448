// kerrmet: bounds, sweeps and simulation checks for Schwarzschild-radius
// estimation with a Kerr-nonlinear Mach-Zehnder interferometer.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kerrmet/bounds.hpp"
#include "kerrmet/config.hpp"
#include "kerrmet/constants.hpp"
#include "kerrmet/feasibility.hpp"
#include "kerrmet/fock.hpp"
#include "kerrmet/geometry.hpp"
#include "kerrmet/interferometer.hpp"
#include "kerrmet/sweep.hpp"

namespace {

using nlohmann::json;
using namespace kerrmet;

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_convergence = 3;

std::string format17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream stream(out_path, std::ios::binary);
  if (!stream) throw config_error("cannot open output path: " + out_path);
  stream << text;
  if (!stream) throw config_error("failed writing output path: " + out_path);
}

json metadata(const ToolkitConfig& config) {
  return json{{"n_prime", config.geometry.n_prime},
              {"curvature_coupling_per_m", curvature_coupling(config.geometry)},
              {"shot_noise_convention", "vacuum_variance_equals_1"}};
}

// key/value rows for the scalar subcommands' CSV form.
std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string out = "quantity,value\n";
  for (const auto& [key, value] : rows) out += key + "," + value + "\n";
  return out;
}

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
};

ToolkitConfig load(const CommonOptions& common) {
  if (common.config_path.empty()) return default_config();
  return load_config(common.config_path);
}

// --- qfi -------------------------------------------------------------------

struct QfiOptions {
  double tau = 1.0;
  std::optional<double> photon_number, omega, chi;
  std::optional<int> q;
  std::optional<std::string> variant;
};

int run_qfi(const CommonOptions& common, const QfiOptions& options) {
  ToolkitConfig config = load(common);
  Probe probe = config.probe;
  if (options.photon_number || options.omega || options.chi || options.q || options.variant) {
    KerrVariant variant = probe.variant;
    if (options.variant) {
      variant = *options.variant == "monomial" ? KerrVariant::monomial
                                               : KerrVariant::shifted_quadratic;
    }
    probe = Probe::from_photon_number(options.photon_number.value_or(probe.photon_number()),
                                      options.omega.value_or(probe.omega),
                                      options.chi.value_or(probe.chi),
                                      options.q.value_or(probe.q), variant);
  }

  const QfiResult analytic =
      probe.variant == KerrVariant::monomial ? qfi_general_q(probe) : qfi_kerr(probe);
  const NumericQfi numeric = numeric_qfi(probe, options.tau);
  const double reference = std::max(analytic.value, 1e-300);
  const double rel_diff = std::abs(numeric.value - analytic.value) / reference;

  if (common.format == "json") {
    json out{{"analytic",
              {{"value_per_s2", analytic.value},
               {"source", analytic.source == QfiSource::analytic_q ? "analytic_q" : "analytic_kerr"},
               {"asymptotic", analytic.asymptotic}}},
             {"numeric",
              {{"value_per_s2", numeric.value},
               {"dtau_s", numeric.dtau},
               {"cutoff", numeric.cutoff},
               {"convergence_estimate", numeric.convergence}}},
             {"relative_difference", rel_diff},
             {"tau_s", options.tau},
             {"metadata", metadata(config)}};
    write_output(out.dump(2) + "\n", common.out_path);
  } else {
    write_output(kv_csv({{"analytic_qfi_per_s2", format17(analytic.value)},
                         {"numeric_qfi_per_s2", format17(numeric.value)},
                         {"relative_difference", format17(rel_diff)},
                         {"numeric_dtau_s", format17(numeric.dtau)},
                         {"numeric_cutoff", std::to_string(numeric.cutoff)},
                         {"convergence_estimate", format17(numeric.convergence)}}),
                 common.out_path);
  }
  return exit_ok;
}

// --- bound -----------------------------------------------------------------

int run_bound(const CommonOptions& common) {
  const ToolkitConfig config = load(common);
  const Probe& probe = config.probe;
  const Geometry& geometry = config.geometry;
  const double m = config.plan.measurements;

  std::optional<double> fisher, fisher_q, quadrature, sql, squeezed;
  std::string quadrature_note;

  if (probe.variant == KerrVariant::monomial) {
    fisher_q = cr_bound_rs_general_q(probe, geometry, m).relative_error;
  } else {
    fisher = cr_bound_rs(probe, geometry, m).relative_error;
  }

  const double metric = linearization_metric(probe, geometry);
  if (metric <= config.sweep.validity_threshold) {
    MeasurementPlan plan;
    plan.measurements = m;
    plan.eps_a = config.plan.eps_a;
    plan.eps_b = config.plan.eps_b;
    quadrature = quadrature_bound_rs(probe, geometry, plan).relative_error;
  } else {
    quadrature_note = "suppressed: chi tau sqrt(N) = " + format17(metric) +
                      " exceeds the linearization threshold";
  }

  sql = sql_bound_rs(probe, geometry, m).relative_error;
  SqueezedProbe sq;
  sq.n_coherent = config.sweep.squeezed.coherent_fraction * probe.photon_number();
  sq.n_squeezed = (1.0 - config.sweep.squeezed.coherent_fraction) * probe.photon_number();
  sq.squeeze_r = config.sweep.squeezed.squeeze_r;
  sq.transmission = config.sweep.squeezed.transmission;
  squeezed = squeezed_lossy_bound(sq, geometry, probe.omega, m).relative_error;

  const ImprovementReport improvement =
      report_improvement(probe.photon_number(), probe.chi, geometry, probe.omega, m);

  if (common.format == "json") {
    json bounds = json::object();
    if (fisher) bounds["fisher"] = *fisher;
    if (fisher_q) bounds["fisher_q"] = *fisher_q;
    bounds["quadrature"] = quadrature ? json(*quadrature) : json(nullptr);
    bounds["sql"] = *sql;
    bounds["squeezed_lossy"] = *squeezed;
    json out{{"relative_error_bounds", bounds},
             {"validity_metric", metric},
             {"y_tilde", y_tilde(probe, geometry.n_prime)},
             {"improvement_over_sql", improvement.ratio},
             {"metadata", metadata(config)}};
    if (!quadrature_note.empty()) out["notes"] = json::array({quadrature_note});
    write_output(out.dump(2) + "\n", common.out_path);
  } else {
    std::string csv = "method,relative_error\n";
    if (fisher) csv += "fisher," + format17(*fisher) + "\n";
    if (fisher_q) csv += "fisher_q," + format17(*fisher_q) + "\n";
    csv += "quadrature," + (quadrature ? format17(*quadrature) : std::string{}) + "\n";
    csv += "sql," + format17(*sql) + "\n";
    csv += "squeezed_lossy," + format17(*squeezed) + "\n";
    write_output(csv, common.out_path);
  }
  return exit_ok;
}

// --- sweep -----------------------------------------------------------------

int run_sweep_command(const CommonOptions& common) {
  const ToolkitConfig config = load(common);
  const std::vector<SweepRow> rows = run_sweep(config.sweep_spec());

  if (common.format == "json") {
    json array = json::array();
    for (const SweepRow& row : rows) {
      json item{{"N", row.photon_number},
                {"chi", row.chi},
                {"y_tilde", row.y_tilde},
                {"validity_metric", row.validity_metric},
                {"valid_flag", row.valid}};
      item["bound_fisher"] = row.bound_fisher ? json(*row.bound_fisher) : json(nullptr);
      item["bound_quadrature"] =
          row.bound_quadrature ? json(*row.bound_quadrature) : json(nullptr);
      item["bound_sql"] = row.bound_sql ? json(*row.bound_sql) : json(nullptr);
      item["bound_squeezed_lossy"] =
          row.bound_squeezed_lossy ? json(*row.bound_squeezed_lossy) : json(nullptr);
      array.push_back(item);
    }
    json out{{"rows", array}, {"metadata", metadata(config)}};
    write_output(out.dump(2) + "\n", common.out_path);
  } else {
    write_output(sweep_csv(rows), common.out_path);
  }
  return exit_ok;
}

// --- mc --------------------------------------------------------------------

int run_mc(const CommonOptions& common, std::uint64_t trials, std::uint64_t seed) {
  const ToolkitConfig config = load(common);
  const MeasurementPlan plan = config.plan.resolve(config.probe, config.geometry);
  const MonteCarloStats stats =
      monte_carlo_estimate(config.probe, config.geometry, plan, trials, seed);
  const double bound = quadrature_bound_rs(config.probe, config.geometry, plan).relative_error;

  if (common.format == "json") {
    json out{{"relative_std", stats.relative_std},
             {"relative_bias", stats.relative_bias},
             {"relative_bias_std_error", stats.relative_bias_se},
             {"quadrature_bound", bound},
             {"std_to_bound_ratio", stats.relative_std / bound},
             {"trials", stats.trials},
             {"seed", stats.seed},
             {"theta_rad", plan.theta},
             {"beta_rad", plan.beta},
             {"metadata", metadata(config)}};
    write_output(out.dump(2) + "\n", common.out_path);
  } else {
    write_output(kv_csv({{"relative_std", format17(stats.relative_std)},
                         {"relative_bias", format17(stats.relative_bias)},
                         {"relative_bias_std_error", format17(stats.relative_bias_se)},
                         {"quadrature_bound", format17(bound)},
                         {"std_to_bound_ratio", format17(stats.relative_std / bound)},
                         {"trials", std::to_string(stats.trials)},
                         {"seed", std::to_string(stats.seed)}}),
                 common.out_path);
  }
  return exit_ok;
}

// --- feasibility -------------------------------------------------------------

int run_feasibility(const CommonOptions& common) {
  const ToolkitConfig config = load(common);
  if (!config.feasibility) {
    throw config_error("feasibility subcommand needs a \"feasibility\" config section");
  }
  const FeasibilityInput& input = *config.feasibility;
  const MaterialChi material = chi_from_material(input);
  const double peak = peak_power(input.photons, input.omega, input.pulse_duration);
  const double average = average_power(input.photons, input.omega, config.plan.measurements);

  std::optional<double> chi_lo, chi_hi;
  if (config.fibre) {
    chi_lo = chi_from_single_photon_phase(config.fibre->phase_min, config.fibre->length,
                                          config.fibre->n0);
    chi_hi = chi_from_single_photon_phase(config.fibre->phase_max, config.fibre->length,
                                          config.fibre->n0);
  }

  if (common.format == "json") {
    json out{{"chi_prime_rad_per_photon", material.chi_prime},
             {"chi_rad_per_s", material.chi},
             {"peak_power_w", peak},
             {"average_power_w", average},
             {"metadata", metadata(config)}};
    if (chi_lo) {
      out["fibre_chi_range"] = json::array({*chi_lo, *chi_hi});
    }
    write_output(out.dump(2) + "\n", common.out_path);
  } else {
    std::vector<std::pair<std::string, std::string>> rows{
        {"chi_prime_rad_per_photon", format17(material.chi_prime)},
        {"chi_rad_per_s", format17(material.chi)},
        {"peak_power_w", format17(peak)},
        {"average_power_w", format17(average)}};
    if (chi_lo) {
      rows.emplace_back("fibre_chi_min", format17(*chi_lo));
      rows.emplace_back("fibre_chi_max", format17(*chi_hi));
    }
    write_output(kv_csv(rows), common.out_path);
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum bounds for Schwarzschild-radius estimation with a "
               "Kerr-nonlinear interferometer"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  CommonOptions common;
  app.add_option("--config", common.config_path, "JSON configuration file")
      ->check(CLI::ExistingFile);
  app.add_option("--out", common.out_path, "output path (default: stdout)");
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  QfiOptions qfi_options;
  CLI::App* qfi_cmd = app.add_subcommand(
      "qfi", "Analytic vs Fock finite-difference quantum Fisher information");
  qfi_cmd->add_option("--tau", qfi_options.tau, "evolution time, s")->capture_default_str();
  qfi_cmd->add_option("--photon-number", qfi_options.photon_number, "override probe N");
  qfi_cmd->add_option("--omega", qfi_options.omega, "override probe omega, rad/s");
  qfi_cmd->add_option("--chi", qfi_options.chi, "override probe chi, rad/s");
  qfi_cmd->add_option("--q", qfi_options.q, "override nonlinearity order");
  qfi_cmd->add_option("--variant", qfi_options.variant, "shifted_quadratic | monomial")
      ->check(CLI::IsMember({"shifted_quadratic", "monomial"}));

  CLI::App* bound_cmd =
      app.add_subcommand("bound", "Single-point r_s error bounds, all methods");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Bound-vs-photon-number sweep as CSV");

  std::uint64_t trials = 10000;
  std::uint64_t seed = 12345;
  CLI::App* mc_cmd = app.add_subcommand(
      "mc", "Monte-Carlo validation of the homodyne estimator");
  mc_cmd->add_option("--trials", trials, "number of estimator trials")->capture_default_str();
  mc_cmd->add_option("--seed", seed, "generator seed")->capture_default_str();

  CLI::App* feasibility_cmd = app.add_subcommand(
      "feasibility", "Material Kerr-rate and pulse-power calculators");

  CLI11_PARSE(app, argc, argv);

  try {
    if (qfi_cmd->parsed()) return run_qfi(common, qfi_options);
    if (bound_cmd->parsed()) return run_bound(common);
    if (sweep_cmd->parsed()) return run_sweep_command(common);
    if (mc_cmd->parsed()) return run_mc(common, trials, seed);
    if (feasibility_cmd->parsed()) return run_feasibility(common);
  } catch (const convergence_error& e) {
    std::cerr << "numerical non-convergence: " << e.what() << "\n";
    return exit_convergence;
  } catch (const config_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_config;
  }
  return exit_ok;
}
