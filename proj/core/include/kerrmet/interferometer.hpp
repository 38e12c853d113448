#ifndef KERRMET_INTERFEROMETER_HPP
#define KERRMET_INTERFEROMETER_HPP

#include <cstdint>

#include "kerrmet/bounds.hpp"
#include "kerrmet/fock.hpp"
#include "kerrmet/geometry.hpp"

namespace kerrmet {

/// Homodyne measurement settings and channel transmissions.
struct MeasurementPlan {
  double theta = 0.0;         ///< quadrature angle, rad
  double beta = 0.0;          ///< auxiliary linear phase, rad
  double measurements = 1.0;  ///< repetition count M
  double eps_a = 1.0;         ///< transmission after the nonlinearities
  double eps_b = 1.0;         ///< transmission before the nonlinearities

  void validate() const;
};

/// Port phases of the linearized output.  zeta_i = k phi_i - tau_i chi N;
/// both are stored reduced to (-pi, pi] (only their values mod 2 pi enter
/// any observable), and zeta2 is built as zeta1 + beta_dark so the dark-port
/// identity holds exactly in floating point.  beta_dark itself is computed
/// from the difference form k phi2 - chi N (tau2 - tau1), which stays
/// accurate when the individual zetas are millions of radians.
struct DerivedPhases {
  double zeta1 = 0.0;
  double zeta2 = 0.0;
  double beta_dark = 0.0;        ///< zeta2 - zeta1
  double phi1 = 0.0;             ///< lower-arm linear phase, m (0 by clock choice)
  double phi2 = 0.0;             ///< upper-arm linear phase, m
  double validity_metric = 0.0;  ///< chi tau1 sqrt(N)
};

/// Squeezed coherent probe for the lossy linear-interferometer baseline.
struct SqueezedProbe {
  double n_coherent = 0.0;   ///< N_c
  double n_squeezed = 0.0;   ///< N_s
  double squeeze_r = 0.0;    ///< squeeze parameter r >= 0
  double transmission = 1.0; ///< channel transmission eps

  void validate() const;
};

struct OptimalSettings {
  double theta = 0.0;
  double beta = 0.0;
  /// sin(theta + zeta2) / sin(theta + zeta1 + beta) - tau1/tau2 evaluated at
  /// the returned settings; zero up to rounding.
  double constraint_residual = 0.0;
};

struct MonteCarloStats {
  double relative_std = 0.0;      ///< empirical std of r_hat / r_s
  double relative_bias = 0.0;     ///< (mean r_hat - r_s) / r_s
  double relative_bias_se = 0.0;  ///< standard error of the bias estimate
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Linearization validity threshold: the mean-field expansion of the Kerr
/// evolution requires chi tau sqrt(N) << 1, operationalized as <= 0.01.
inline constexpr double linearization_threshold = 0.01;

/// chi tau1 sqrt(N) for this probe and geometry.
double linearization_metric(const Probe& probe, const Geometry& g);

/// Probe with |alpha|^2 scaled by the insertion transmission eps_b.  Phases
/// fed to the measurement model must be derived from the attenuated probe,
/// since loss before the nonlinearity reduces the photon number it sees.
Probe attenuated_probe(const Probe& probe, double eps_b);

/// Port phases for this probe and geometry, with phi1 = 0 by clock
/// convention and phi2 from the upper-arm linear phase.  Throws
/// validity_error when chi tau sqrt(N) exceeds the threshold.
DerivedPhases derived_phases(const Probe& probe, const Geometry& g,
                             double threshold = linearization_threshold);

/// Mean output quadrature at angle theta:
///   <X_b> = sqrt(eps_a) |alpha'| (cos(theta + zeta2) - cos(theta + zeta1 + beta)),
/// |alpha'|^2 = eps_b N.  Evaluated as a product of sines of half-angles so
/// the dark port is exactly zero.
double mean_quadrature(const MeasurementPlan& plan, const Probe& probe,
                       const DerivedPhases& phases);

/// Output quadrature variance in shot-noise units (vacuum = 1):
///   eps_a chi^2 N'^2 S^2 - eps_a chi N' S D + 1,
/// with S = tau2 sin(theta + zeta2) - tau1 sin(theta + zeta1 + beta),
/// D = cos(theta + zeta2) - cos(theta + zeta1 + beta), N' = eps_b N.
/// Structurally bounded below by 1 - eps_a D^2 / 4 >= 0.
double quadrature_variance(const MeasurementPlan& plan, const Probe& probe,
                           const DerivedPhases& phases, const ArmTimes& times);

/// Settings that pin the variance back to shot noise:
///   theta* = pi/2 - zeta2,
///   beta*  = zeta2 - zeta1 - pi/2 + asin(tau2 / tau1).
/// Throws std::domain_error if tau2/tau1 falls outside (0, 1].
OptimalSettings optimal_settings(const Probe& probe, const DerivedPhases& phases,
                                 const ArmTimes& times);

/// Magnitude of the estimator's mean-map slope at the optimal settings:
///   sqrt(eps_a eps_b N) (omega/n' + eps_b N chi) (h/(2 r_a r_b)) (L/c) (1 + tau2/tau1).
double mean_derivative_rs(const Probe& probe, const Geometry& g,
                          const MeasurementPlan& plan);

/// Homodyne error bound on the relative Schwarzschild-radius error:
///   r_a r_b c / (L h r_s (1 - delta) sqrt(eps_a eps_b M N (omega/n' + eps_b N chi)^2)).
BoundResult quadrature_bound_rs(const Probe& probe, const Geometry& g,
                                const MeasurementPlan& plan);

/// chi = 0 specialization of the homodyne bound (lossless): the standard
/// quantum limit reference line.
BoundResult sql_bound_rs(const Probe& probe, const Geometry& g, double measurements);

/// Lossy squeezed-coherent baseline for a linear interferometer:
///   r_a r_b c n' / (2 L h r_s omega sqrt(M (eps N_c / (1 - eps + eps e^{-2r}) + eps N_s))).
BoundResult squeezed_lossy_bound(const SqueezedProbe& sq, const Geometry& g,
                                 double probe_omega, double measurements);

/// Draws `trials` M-sample means of the homodyne readout from the linearized
/// Gaussian model at the plan's settings, inverts the first-order mean map,
/// and reports the empirical spread and bias of the resulting r_s estimates.
/// A counter-based generator makes the output a pure function of the seed.
/// Throws estimation_error when the mean-map slope vanishes.
MonteCarloStats monte_carlo_estimate(const Probe& probe, const Geometry& g,
                                     const MeasurementPlan& plan, std::uint64_t trials,
                                     std::uint64_t seed);

}  // namespace kerrmet

#endif  // KERRMET_INTERFEROMETER_HPP
