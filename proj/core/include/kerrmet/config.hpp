#ifndef KERRMET_CONFIG_HPP
#define KERRMET_CONFIG_HPP

#include <optional>
#include <string>

#include "kerrmet/feasibility.hpp"
#include "kerrmet/fock.hpp"
#include "kerrmet/geometry.hpp"
#include "kerrmet/interferometer.hpp"
#include "kerrmet/sweep.hpp"

namespace kerrmet {

/// Measurement settings as configured; theta/beta fall back to the optimal
/// settings when omitted.
struct PlanConfig {
  double measurements = 1e10;
  double eps_a = 1.0;
  double eps_b = 1.0;
  std::optional<double> theta;
  std::optional<double> beta;

  /// Plan with explicit settings, or the optimal ones for this operating
  /// point when theta/beta were not configured.
  MeasurementPlan resolve(const Probe& probe, const Geometry& g) const;
};

/// Optional fibre cross-check block: back out chi from a measured
/// single-photon phase range.
struct FibreCheck {
  double length = 4.5;        ///< m
  double n0 = 1.0;
  double phase_min = 1e-8;    ///< rad per photon
  double phase_max = 1e-7;    ///< rad per photon
};

struct SweepGridConfig {
  double decade_min = 10.0;
  double decade_max = 20.0;
  int points_per_decade = 4;
  std::vector<double> chi_values{1e-6, 1e-2, 0.1, 1.0, 6.0};
  std::vector<BoundMethod> methods{BoundMethod::fisher, BoundMethod::quadrature,
                                   BoundMethod::sql, BoundMethod::squeezed_lossy};
  double validity_threshold = linearization_threshold;
  SqueezedSettings squeezed;
};

struct ToolkitConfig {
  Probe probe;
  Geometry geometry;
  PlanConfig plan;
  SweepGridConfig sweep;
  std::optional<FeasibilityInput> feasibility;
  std::optional<FibreCheck> fibre;

  /// SweepSpec for this configuration.
  SweepSpec sweep_spec() const;
};

/// Desk-scale defaults: Earth radius, h = 10 m, L = 1 cm, omega = 1e14 rad/s,
/// M = 1e10, probe N = 1e15 at chi = 0.1.
ToolkitConfig default_config();

/// Loads a JSON configuration.  All quantities are SI with the unit in the
/// key name (e.g. omega_rad_per_s).  Unknown keys are rejected with a
/// config_error naming the offending path; so are invalid values.
ToolkitConfig load_config(const std::string& path);

/// Same, from a JSON string.
ToolkitConfig parse_config(const std::string& text);

}  // namespace kerrmet

#endif  // KERRMET_CONFIG_HPP
