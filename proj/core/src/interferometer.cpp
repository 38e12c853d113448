#include "kerrmet/interferometer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "kerrmet/constants.hpp"

namespace kerrmet {

namespace {

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

// cos(a) - cos(b) written as a product, with the half-difference supplied
// directly: the dark-port zero must not depend on cancelling two cosines of
// possibly huge port phases.
double cos_difference(double half_sum, double half_diff) {
  return -2.0 * std::sin(half_sum) * std::sin(half_diff);
}

// --- counter-based Gaussian generator -------------------------------------
//
// Each trial's variate is a pure function of (seed, index), so trials can be
// evaluated in any order, or concurrently, with identical output.

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double uniform_open01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

double standard_normal(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t a = splitmix64(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  const std::uint64_t b = splitmix64(a);
  const double u1 = uniform_open01(a);
  const double u2 = uniform_open01(b);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace

void MeasurementPlan::validate() const {
  if (!(measurements >= 1.0)) throw std::invalid_argument("measurement count M must be >= 1");
  require_unit_interval(eps_a, "eps_a");
  require_unit_interval(eps_b, "eps_b");
  if (!std::isfinite(theta) || !std::isfinite(beta)) {
    throw std::invalid_argument("theta and beta must be finite");
  }
}

void SqueezedProbe::validate() const {
  if (!(n_coherent >= 0.0)) throw std::invalid_argument("N_c must be >= 0");
  if (!(n_squeezed >= 0.0)) throw std::invalid_argument("N_s must be >= 0");
  if (!(squeeze_r >= 0.0)) throw std::invalid_argument("squeeze parameter r must be >= 0");
  require_unit_interval(transmission, "transmission");
}

double linearization_metric(const Probe& probe, const Geometry& g) {
  const double tau1 = g.arm_length / speed_of_light;
  return probe.chi * tau1 * std::sqrt(probe.photon_number());
}

Probe attenuated_probe(const Probe& probe, double eps_b) {
  require_unit_interval(eps_b, "eps_b");
  Probe out = probe;
  out.alpha *= std::sqrt(eps_b);
  return out;
}

DerivedPhases derived_phases(const Probe& probe, const Geometry& g, double threshold) {
  probe.validate();
  g.validate();
  const ArmTimes times = arm_proper_times(g);
  const double n = probe.photon_number();

  DerivedPhases phases;
  phases.validity_metric = probe.chi * times.tau1 * std::sqrt(n);
  if (phases.validity_metric > threshold) {
    throw validity_error("linearized model invalid: chi tau sqrt(N) = " +
                             std::to_string(phases.validity_metric) + " exceeds " +
                             std::to_string(threshold),
                         phases.validity_metric);
  }

  const double k = probe.omega / speed_of_light;
  phases.phi1 = 0.0;
  phases.phi2 = linear_phase_phi24(g).exact;

  // beta_dark = zeta2 - zeta1 = k (phi2 - phi1) - chi N (tau2 - tau1), with
  // the arm-time difference taken from the full-precision ratio - 1.
  const double dtau21 = proper_time_ratio_m1(g) * times.tau1;
  const double beta_dark_raw = k * (phases.phi2 - phases.phi1) - probe.chi * n * dtau21;
  const double zeta1_raw = k * phases.phi1 - probe.chi * n * times.tau1;

  phases.zeta1 = std::remainder(zeta1_raw, two_pi);
  phases.beta_dark = std::remainder(beta_dark_raw, two_pi);
  phases.zeta2 = phases.zeta1 + phases.beta_dark;
  return phases;
}

double mean_quadrature(const MeasurementPlan& plan, const Probe& probe,
                       const DerivedPhases& phases) {
  plan.validate();
  const double n_eff = plan.eps_b * probe.photon_number();
  const double amplitude = std::sqrt(plan.eps_a * n_eff);
  const double half_sum = plan.theta + 0.5 * (phases.zeta1 + phases.zeta2 + plan.beta);
  const double half_diff = 0.5 * (phases.beta_dark - plan.beta);
  return amplitude * cos_difference(half_sum, half_diff);
}

double quadrature_variance(const MeasurementPlan& plan, const Probe& probe,
                           const DerivedPhases& phases, const ArmTimes& times) {
  plan.validate();
  const double n_eff = plan.eps_b * probe.photon_number();
  const double a = plan.theta + phases.zeta2;
  const double b = plan.theta + phases.zeta1 + plan.beta;
  const double rotation = times.tau2 * std::sin(a) - times.tau1 * std::sin(b);
  const double port_diff = cos_difference(
      plan.theta + 0.5 * (phases.zeta1 + phases.zeta2 + plan.beta),
      0.5 * (phases.beta_dark - plan.beta));
  const double xn = probe.chi * n_eff;
  return plan.eps_a * xn * xn * rotation * rotation -
         plan.eps_a * xn * rotation * port_diff + 1.0;
}

OptimalSettings optimal_settings(const Probe& probe, const DerivedPhases& phases,
                                 const ArmTimes& times) {
  probe.validate();
  const double ratio = times.tau2 / times.tau1;
  if (!(ratio > 0.0) || ratio > 1.0 + 1e-12) {
    throw std::domain_error("tau2/tau1 = " + std::to_string(ratio) +
                            " outside (0, 1]: no shot-noise angle exists");
  }

  OptimalSettings opt;
  opt.theta = half_pi - phases.zeta2;
  // Written as an offset from the dark port so that tau2 == tau1 lands on
  // beta_dark exactly.
  opt.beta = phases.beta_dark + (std::asin(std::min(ratio, 1.0)) - half_pi);

  const double sin_a = std::sin(opt.theta + phases.zeta2);
  const double sin_b = std::sin(opt.theta + phases.zeta1 + opt.beta);
  opt.constraint_residual = sin_a / sin_b - times.tau1 / times.tau2;
  return opt;
}

double mean_derivative_rs(const Probe& probe, const Geometry& g,
                          const MeasurementPlan& plan) {
  probe.validate();
  plan.validate();
  const double n_eff = plan.eps_b * probe.photon_number();
  const double ratio = proper_time_ratio(g, DilationMode::exact);
  return std::sqrt(plan.eps_a * n_eff) *
         (probe.omega / g.n_prime + n_eff * probe.chi) * curvature_coupling(g) *
         (g.arm_length / speed_of_light) * (1.0 + ratio);
}

BoundResult quadrature_bound_rs(const Probe& probe, const Geometry& g,
                                const MeasurementPlan& plan) {
  probe.validate();
  g.validate();
  plan.validate();
  if (!(g.r_s > 0.0)) throw std::domain_error("relative error is undefined at r_s = 0");
  if (!(g.h > 0.0)) throw std::invalid_argument("arm separation h must be > 0");
  const double n = probe.photon_number();
  const double n_eff = plan.eps_b * n;
  const double bracket = probe.omega / g.n_prime + n_eff * probe.chi;
  const double info = plan.eps_a * plan.eps_b * plan.measurements * n * bracket * bracket;
  if (!(info > 0.0)) {
    throw std::invalid_argument("quadrature bound undefined: zero signal (check N, omega/chi, losses)");
  }
  const double delta = dilation_delta(g);
  BoundResult result;
  result.relative_error = g.r_a * g.r_b * speed_of_light /
                          (g.arm_length * g.h * g.r_s * (1.0 - delta) * std::sqrt(info));
  result.method = BoundMethod::quadrature;
  result.inputs = {probe, g, plan.measurements, plan.eps_a, plan.eps_b};
  return result;
}

BoundResult sql_bound_rs(const Probe& probe, const Geometry& g, double measurements) {
  Probe linear = probe;
  linear.chi = 0.0;
  MeasurementPlan plan;
  plan.measurements = measurements;
  BoundResult result = quadrature_bound_rs(linear, g, plan);
  result.method = BoundMethod::sql;
  return result;
}

BoundResult squeezed_lossy_bound(const SqueezedProbe& sq, const Geometry& g,
                                 double probe_omega, double measurements) {
  sq.validate();
  g.validate();
  if (!(probe_omega > 0.0)) throw std::invalid_argument("omega must be > 0");
  if (!(measurements >= 1.0)) throw std::invalid_argument("measurement count M must be >= 1");
  if (!(g.r_s > 0.0)) throw std::domain_error("relative error is undefined at r_s = 0");
  if (!(g.h > 0.0)) throw std::invalid_argument("arm separation h must be > 0");

  const double eps = sq.transmission;
  const double denom_c = 1.0 - eps + eps * std::exp(-2.0 * sq.squeeze_r);
  const double info = eps * sq.n_coherent / denom_c + eps * sq.n_squeezed;
  if (!(info > 0.0)) {
    throw std::invalid_argument("squeezed bound undefined: no transmitted photons");
  }

  BoundResult result;
  result.relative_error =
      g.r_a * g.r_b * speed_of_light * g.n_prime /
      (2.0 * g.arm_length * g.h * g.r_s * probe_omega * std::sqrt(measurements * info));
  result.method = BoundMethod::squeezed_lossy;
  result.inputs.geometry = g;
  result.inputs.measurements = measurements;
  result.inputs.probe = Probe::from_photon_number(sq.n_coherent + sq.n_squeezed, probe_omega, 0.0);
  result.inputs.eps_a = eps;
  result.inputs.eps_b = 1.0;
  return result;
}

MonteCarloStats monte_carlo_estimate(const Probe& probe, const Geometry& g,
                                     const MeasurementPlan& plan, std::uint64_t trials,
                                     std::uint64_t seed) {
  if (trials < 100) throw std::invalid_argument("need at least 100 trials");
  plan.validate();
  if (!(g.r_s > 0.0)) throw std::domain_error("relative error is undefined at r_s = 0");

  // Operating point of the linearized Gaussian readout.  Phases come from
  // the insertion-loss-adjusted probe, matching what the Kerr media see.
  const DerivedPhases phases = derived_phases(attenuated_probe(probe, plan.eps_b), g);
  const ArmTimes times = arm_proper_times(g);
  const double mean0 = mean_quadrature(plan, probe, phases);
  const double variance = quadrature_variance(plan, probe, phases, times);
  const double slope = mean_derivative_rs(probe, g, plan);
  if (!(std::abs(slope) > 0.0) || !std::isfinite(slope)) {
    throw estimation_error("mean-map slope is zero: r_s cannot be inverted from the readout");
  }

  const double sample_sigma = std::sqrt(variance / plan.measurements);

  // Accumulate the estimator's deviation from the operating point; the
  // variance of r_hat is then free of cancellation against r_s^2.
  long double sum = 0.0L;
  long double sum_sq = 0.0L;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const double mean_readout = mean0 + sample_sigma * standard_normal(seed, i);
    const double deviation = (mean_readout - mean0) / slope;
    sum += deviation;
    sum_sq += static_cast<long double>(deviation) * deviation;
  }

  const long double n = static_cast<long double>(trials);
  const long double mean_dev = sum / n;
  const long double var = std::max((sum_sq - n * mean_dev * mean_dev) / (n - 1.0L), 0.0L);
  const double std_dev = static_cast<double>(std::sqrt(var));

  MonteCarloStats stats;
  stats.relative_std = std_dev / g.r_s;
  stats.relative_bias = static_cast<double>(mean_dev) / g.r_s;
  stats.relative_bias_se = std_dev / (g.r_s * std::sqrt(static_cast<double>(trials)));
  stats.trials = trials;
  stats.seed = seed;
  return stats;
}

}  // namespace kerrmet
