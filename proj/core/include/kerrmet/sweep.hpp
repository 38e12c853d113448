#ifndef KERRMET_SWEEP_HPP
#define KERRMET_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "kerrmet/geometry.hpp"
#include "kerrmet/interferometer.hpp"

namespace kerrmet {

/// Parameters of the squeezed-probe baseline evaluated alongside each sweep
/// row: the row's photon number is split between coherent and squeezed
/// populations.
struct SqueezedSettings {
  double transmission = 1.0 - 1e-6;
  double squeeze_r = 20.0;
  double coherent_fraction = 0.5;
};

/// One bound-vs-photon-number sweep: a log-spaced photon grid crossed with a
/// list of Kerr couplings, evaluated with a fixed geometry and plan.
struct SweepSpec {
  double decade_min = 10.0;
  double decade_max = 20.0;
  int points_per_decade = 4;
  std::vector<double> chi_values{0.1};
  Geometry geometry;
  double omega = 1e14;            ///< rad/s
  double measurements = 1e10;     ///< M
  double eps_a = 1.0;
  double eps_b = 1.0;
  std::vector<BoundMethod> methods{BoundMethod::fisher, BoundMethod::quadrature,
                                   BoundMethod::sql, BoundMethod::squeezed_lossy};
  double validity_threshold = linearization_threshold;
  SqueezedSettings squeezed;

  void validate() const;
};

struct SweepRow {
  double photon_number = 0.0;
  double chi = 0.0;
  double y_tilde = 0.0;
  std::optional<double> bound_fisher;
  std::optional<double> bound_quadrature;  ///< absent when invalid or unselected
  std::optional<double> bound_sql;
  std::optional<double> bound_squeezed_lossy;
  double validity_metric = 0.0;
  bool valid = false;
};

/// Evaluates every (chi, N) grid point.  Rows are ordered by (chi, N)
/// ascending regardless of evaluation order; rows whose linearization metric
/// exceeds the threshold carry valid = false and no quadrature bound.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Deterministic CSV rendering with the fixed header
///   N,chi,y_tilde,bound_fisher,bound_quadrature,bound_sql,bound_squeezed_lossy,validity_metric,valid_flag
/// and 17-significant-digit floats.  Suppressed bounds render as empty cells.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Nonlinearity dominance parameter y = N chi n' / omega.
double y_tilde(const Probe& probe, double n_prime);

/// SQL-to-nonlinear bound ratio at a single operating point, together with
/// both absolute bounds.  The ratio reduces to 1 + N chi n' / omega.
struct ImprovementReport {
  double ratio = 1.0;
  double sql_bound = 0.0;
  double quadrature_bound = 0.0;
};
ImprovementReport report_improvement(double photon_number, double chi, const Geometry& g,
                                     double omega, double measurements);

}  // namespace kerrmet

#endif  // KERRMET_SWEEP_HPP
