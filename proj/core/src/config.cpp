#include "kerrmet/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kerrmet {

namespace {

using nlohmann::json;

void require_object(const json& node, const std::string& path) {
  if (!node.is_object()) throw config_error(path + " must be a JSON object");
}

void reject_unknown_keys(const json& node, const std::set<std::string>& allowed,
                         const std::string& path) {
  for (const auto& item : node.items()) {
    if (!allowed.count(item.key())) {
      throw config_error("unknown key \"" + path + item.key() + "\"");
    }
  }
}

double get_number(const json& node, const std::string& key, double fallback,
                  const std::string& path) {
  if (!node.contains(key)) return fallback;
  const json& value = node.at(key);
  if (!value.is_number()) throw config_error(path + key + " must be a number");
  return value.get<double>();
}

KerrVariant parse_variant(const std::string& name, const std::string& path) {
  if (name == "shifted_quadratic") return KerrVariant::shifted_quadratic;
  if (name == "monomial") return KerrVariant::monomial;
  throw config_error(path + "variant must be \"shifted_quadratic\" or \"monomial\"");
}

BoundMethod parse_method(const std::string& name, const std::string& path) {
  if (name == "fisher") return BoundMethod::fisher;
  if (name == "fisher_q") return BoundMethod::fisher_q;
  if (name == "quadrature") return BoundMethod::quadrature;
  if (name == "sql") return BoundMethod::sql;
  if (name == "squeezed_lossy") return BoundMethod::squeezed_lossy;
  throw config_error(path + "unknown bound method \"" + name + "\"");
}

void parse_probe(const json& node, Probe& probe) {
  require_object(node, "probe");
  reject_unknown_keys(node,
                      {"photon_number", "omega_rad_per_s", "chi_rad_per_s", "q", "variant"},
                      "probe.");
  const double n = get_number(node, "photon_number", probe.photon_number(), "probe.");
  const double omega = get_number(node, "omega_rad_per_s", probe.omega, "probe.");
  const double chi = get_number(node, "chi_rad_per_s", probe.chi, "probe.");
  int q = probe.q;
  if (node.contains("q")) {
    if (!node.at("q").is_number_integer()) throw config_error("probe.q must be an integer");
    q = node.at("q").get<int>();
  }
  KerrVariant variant = probe.variant;
  if (node.contains("variant")) {
    if (!node.at("variant").is_string()) throw config_error("probe.variant must be a string");
    variant = parse_variant(node.at("variant").get<std::string>(), "probe.");
  }
  probe = Probe::from_photon_number(n, omega, chi, q, variant);
}

void parse_geometry(const json& node, Geometry& geometry) {
  require_object(node, "geometry");
  reject_unknown_keys(node, {"r_s_m", "r_a_m", "h_m", "arm_length_m", "n_prime"},
                      "geometry.");
  const double r_s = get_number(node, "r_s_m", geometry.r_s, "geometry.");
  const double r_a = get_number(node, "r_a_m", geometry.r_a, "geometry.");
  const double h = get_number(node, "h_m", geometry.h, "geometry.");
  const double arm = get_number(node, "arm_length_m", geometry.arm_length, "geometry.");
  const double n_prime = get_number(node, "n_prime", geometry.n_prime, "geometry.");
  geometry = Geometry::make(r_s, r_a, h, arm, n_prime);
}

void parse_plan(const json& node, PlanConfig& plan) {
  require_object(node, "plan");
  reject_unknown_keys(node, {"measurements", "eps_a", "eps_b", "theta_rad", "beta_rad"},
                      "plan.");
  plan.measurements = get_number(node, "measurements", plan.measurements, "plan.");
  plan.eps_a = get_number(node, "eps_a", plan.eps_a, "plan.");
  plan.eps_b = get_number(node, "eps_b", plan.eps_b, "plan.");
  if (node.contains("theta_rad")) {
    plan.theta = get_number(node, "theta_rad", 0.0, "plan.");
  }
  if (node.contains("beta_rad")) {
    plan.beta = get_number(node, "beta_rad", 0.0, "plan.");
  }
}

void parse_squeezed(const json& node, SqueezedSettings& squeezed) {
  require_object(node, "sweep.squeezed");
  reject_unknown_keys(node, {"transmission", "squeeze_r", "coherent_fraction"},
                      "sweep.squeezed.");
  squeezed.transmission =
      get_number(node, "transmission", squeezed.transmission, "sweep.squeezed.");
  squeezed.squeeze_r = get_number(node, "squeeze_r", squeezed.squeeze_r, "sweep.squeezed.");
  squeezed.coherent_fraction =
      get_number(node, "coherent_fraction", squeezed.coherent_fraction, "sweep.squeezed.");
}

void parse_sweep(const json& node, SweepGridConfig& sweep) {
  require_object(node, "sweep");
  reject_unknown_keys(node,
                      {"n_decade_min", "n_decade_max", "points_per_decade", "chi_list",
                       "methods", "validity_threshold", "squeezed"},
                      "sweep.");
  sweep.decade_min = get_number(node, "n_decade_min", sweep.decade_min, "sweep.");
  sweep.decade_max = get_number(node, "n_decade_max", sweep.decade_max, "sweep.");
  if (node.contains("points_per_decade")) {
    if (!node.at("points_per_decade").is_number_integer()) {
      throw config_error("sweep.points_per_decade must be an integer");
    }
    sweep.points_per_decade = node.at("points_per_decade").get<int>();
  }
  if (node.contains("chi_list")) {
    const json& list = node.at("chi_list");
    if (!list.is_array() || list.empty()) {
      throw config_error("sweep.chi_list must be a non-empty array");
    }
    sweep.chi_values.clear();
    for (const json& value : list) {
      if (!value.is_number()) throw config_error("sweep.chi_list entries must be numbers");
      sweep.chi_values.push_back(value.get<double>());
    }
  }
  if (node.contains("methods")) {
    const json& list = node.at("methods");
    if (!list.is_array() || list.empty()) {
      throw config_error("sweep.methods must be a non-empty array");
    }
    sweep.methods.clear();
    for (const json& value : list) {
      if (!value.is_string()) throw config_error("sweep.methods entries must be strings");
      sweep.methods.push_back(parse_method(value.get<std::string>(), "sweep.methods: "));
    }
  }
  sweep.validity_threshold =
      get_number(node, "validity_threshold", sweep.validity_threshold, "sweep.");
  if (node.contains("squeezed")) parse_squeezed(node.at("squeezed"), sweep.squeezed);
}

void parse_feasibility(const json& node, std::optional<FeasibilityInput>& feasibility) {
  require_object(node, "feasibility");
  reject_unknown_keys(node,
                      {"n_tilde_m2_per_w", "n0", "area_m2", "pulse_duration_s",
                       "omega_rad_per_s", "photons_per_pulse"},
                      "feasibility.");
  FeasibilityInput input;
  input.n_tilde = get_number(node, "n_tilde_m2_per_w", 0.0, "feasibility.");
  input.n0 = get_number(node, "n0", 1.0, "feasibility.");
  input.area = get_number(node, "area_m2", 0.0, "feasibility.");
  input.pulse_duration = get_number(node, "pulse_duration_s", 0.0, "feasibility.");
  input.omega = get_number(node, "omega_rad_per_s", 0.0, "feasibility.");
  input.photons = get_number(node, "photons_per_pulse", 0.0, "feasibility.");
  input.validate();
  feasibility = input;
}

void parse_fibre(const json& node, std::optional<FibreCheck>& fibre) {
  require_object(node, "fibre");
  reject_unknown_keys(node, {"length_m", "n0", "phase_min_rad", "phase_max_rad"}, "fibre.");
  FibreCheck check;
  check.length = get_number(node, "length_m", check.length, "fibre.");
  check.n0 = get_number(node, "n0", check.n0, "fibre.");
  check.phase_min = get_number(node, "phase_min_rad", check.phase_min, "fibre.");
  check.phase_max = get_number(node, "phase_max_rad", check.phase_max, "fibre.");
  fibre = check;
}

ToolkitConfig parse_json(const json& root) {
  require_object(root, "configuration root");
  reject_unknown_keys(root, {"probe", "geometry", "plan", "sweep", "feasibility", "fibre"},
                      "");
  ToolkitConfig config = default_config();
  try {
    if (root.contains("probe")) parse_probe(root.at("probe"), config.probe);
    if (root.contains("geometry")) parse_geometry(root.at("geometry"), config.geometry);
    if (root.contains("plan")) parse_plan(root.at("plan"), config.plan);
    if (root.contains("sweep")) parse_sweep(root.at("sweep"), config.sweep);
    if (root.contains("feasibility")) {
      parse_feasibility(root.at("feasibility"), config.feasibility);
    }
    if (root.contains("fibre")) parse_fibre(root.at("fibre"), config.fibre);
  } catch (const config_error&) {
    throw;
  } catch (const std::exception& e) {
    // Validation failures from the domain types surface as config errors.
    throw config_error(e.what());
  }
  return config;
}

}  // namespace

MeasurementPlan PlanConfig::resolve(const Probe& probe, const Geometry& g) const {
  MeasurementPlan plan;
  plan.measurements = measurements;
  plan.eps_a = eps_a;
  plan.eps_b = eps_b;
  if (theta && beta) {
    plan.theta = *theta;
    plan.beta = *beta;
  } else {
    const DerivedPhases phases = derived_phases(attenuated_probe(probe, eps_b), g);
    const ArmTimes times = arm_proper_times(g);
    const OptimalSettings opt = optimal_settings(probe, phases, times);
    plan.theta = theta.value_or(opt.theta);
    plan.beta = beta.value_or(opt.beta);
  }
  plan.validate();
  return plan;
}

SweepSpec ToolkitConfig::sweep_spec() const {
  SweepSpec spec;
  spec.decade_min = sweep.decade_min;
  spec.decade_max = sweep.decade_max;
  spec.points_per_decade = sweep.points_per_decade;
  spec.chi_values = sweep.chi_values;
  spec.geometry = geometry;
  spec.omega = probe.omega;
  spec.measurements = plan.measurements;
  spec.eps_a = plan.eps_a;
  spec.eps_b = plan.eps_b;
  spec.methods = sweep.methods;
  spec.validity_threshold = sweep.validity_threshold;
  spec.squeezed = sweep.squeezed;
  return spec;
}

ToolkitConfig default_config() {
  ToolkitConfig config;
  config.probe = Probe::from_photon_number(1e15, 1e14, 0.1);
  config.geometry = Geometry::make(8.87e-3, 6.37e6, 10.0, 0.01, 1.0);
  return config;
}

ToolkitConfig load_config(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw config_error("cannot open config file: " + path);
  std::ostringstream text;
  text << stream.rdbuf();
  return parse_config(text.str());
}

ToolkitConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_json(root);
}

}  // namespace kerrmet
