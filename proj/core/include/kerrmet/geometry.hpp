#ifndef KERRMET_GEOMETRY_HPP
#define KERRMET_GEOMETRY_HPP

namespace kerrmet {

/// Schwarzschild geometry of the interferometer: two horizontal arms of
/// length L at radii r_a (lower) and r_b = r_a + h (upper), outside the
/// horizon, with a first-order refractive index n' in the nonlinear media.
struct Geometry {
  double r_s = 0.0;        ///< Schwarzschild radius, m
  double r_a = 0.0;        ///< lower-arm radius, m
  double r_b = 0.0;        ///< upper-arm radius, m (r_a + h)
  double h = 0.0;          ///< arm separation, m
  double arm_length = 0.0; ///< horizontal arm length L, m
  double n_prime = 1.0;    ///< first-order refractive index

  /// Builds a geometry with r_b = r_a + h exactly.
  static Geometry make(double r_s, double r_a, double h, double arm_length,
                       double n_prime = 1.0);

  /// Throws std::domain_error if the lower arm is at or inside the horizon,
  /// std::invalid_argument on other violations (h < 0, L <= 0, n' < 1, ...).
  void validate() const;
};

/// Proper traversal times of the two arms and the dilation parameter.
struct ArmTimes {
  double tau1 = 0.0;   ///< lower arm, s (= L/c by clock convention)
  double tau2 = 0.0;   ///< upper arm, s (= ratio * tau1)
  double delta = 0.0;  ///< r_s h / (2 r_a r_b)
};

enum class DilationMode { exact, first_order };

/// delta = r_s h / (2 r_a r_b), the first-order dilation parameter.
double dilation_delta(const Geometry& g);

/// h / (2 r_a r_b) = delta / r_s.  Finite at r_s = 0; this is the only
/// combination of the reference-observer constants the bounds ever use.
double curvature_coupling(const Geometry& g);

/// tau2 / tau1.  Exact mode evaluates the metric ratio via log1p so the
/// deviation from 1 is resolved even when it is far below one ulp of 1;
/// first_order returns 1 - delta.  Lies in (0, 1] for r_b > r_a > r_s.
double proper_time_ratio(const Geometry& g, DilationMode mode);

/// Exact tau2/tau1 - 1 (= -delta to first order), kept at full relative
/// precision; phase differences between the arms are proportional to this.
double proper_time_ratio_m1(const Geometry& g);

/// tau1 = L/c, tau2 = ratio * tau1 (exact mode), delta as defined.
ArmTimes arm_proper_times(const Geometry& g);

/// Upper-arm linear phase in length units (multiply by the wavenumber k to
/// get radians): exact (1 - ratio/n') L and first-order
/// (1 - 1/n' + r_s h/(2 r_a r_b n')) L.
struct LinearPhase {
  double exact = 0.0;
  double first_order = 0.0;
};
LinearPhase linear_phase_phi24(const Geometry& g);

/// d tau2 / d r_s = -(h / (2 r_a r_b)) (L/c), s/m.  Independent of r_s at
/// first order, so it is defined at r_s = 0 as well.
double dtau2_drs(const Geometry& g);

}  // namespace kerrmet

#endif  // KERRMET_GEOMETRY_HPP
