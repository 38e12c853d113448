#ifndef KERRMET_BOUNDS_HPP
#define KERRMET_BOUNDS_HPP

#include "kerrmet/fock.hpp"
#include "kerrmet/geometry.hpp"

namespace kerrmet {

enum class QfiSource { analytic_kerr, analytic_q, numeric };

struct QfiResult {
  double value = 0.0;  ///< QFI with respect to tau, 1/s^2
  QfiSource source = QfiSource::analytic_kerr;
  /// The general-q expression linearizes around a large coherent amplitude,
  /// so its value is only asymptotically exact in N.
  bool asymptotic = false;
};

enum class BoundMethod { fisher, fisher_q, quadrature, sql, squeezed_lossy };
const char* to_string(BoundMethod method);

/// Echo of everything that went into a bound, so results are self-describing.
struct BoundInputs {
  Probe probe;
  Geometry geometry;
  double measurements = 1.0;
  double eps_a = 1.0;
  double eps_b = 1.0;
};

struct BoundResult {
  double relative_error = 0.0;  ///< lower bound on delta(r_s)/r_s
  BoundMethod method = BoundMethod::fisher;
  BoundInputs inputs;
};

/// Quadratic coefficient C of the short-time fidelity F = 1 - C dtau^2 for
/// the shifted-quadratic Kerr evolution:
///   C = N (2 (2 + 5N + 2N^2) chi^2 + 4 (1 + N) chi omega + omega^2).
double second_order_fidelity_coefficient(const Probe& probe);

/// F(tau, tau + dtau) to second order in dtau.  Only meaningful while
/// |dtau| sqrt(H) stays small; see second_order_validity_metric.
double fidelity_second_order(const Probe& probe, double dtau);

/// |dtau| sqrt(H(tau)); the expansion above degrades once this nears 0.1.
double second_order_validity_metric(const Probe& probe, double dtau);

/// 8 (1 - sqrt(F)) / dtau^2 with F from the second-order expansion, evaluated
/// in the algebraically equivalent form 8C / (1 + sqrt(1 - C dtau^2)) so the
/// small-dtau limit is reached without cancellation.  Converges to qfi_kerr
/// as dtau -> 0.
double qfi_from_fidelity_expansion(const Probe& probe, double dtau);

/// Closed-form QFI for the shifted-quadratic evolution:
///   H = 4 N ((omega + 2 (N + 1) chi)^2 + 2 N chi^2).
QfiResult qfi_kerr(const Probe& probe);

/// Large-N QFI for the monomial evolution of order q:
///   H = 4 N (q chi N^(q-1) + omega)^2.
QfiResult qfi_general_q(const Probe& probe);

/// Cramer-Rao bound on tau: 1 / sqrt(M H).  Throws std::invalid_argument on
/// zero information (unbounded variance) or M < 1.
double cr_bound_tau(const QfiResult& qfi, double measurements);

/// Fisher-information bound on the relative error of the Schwarzschild
/// radius,
///   r_a r_b c / (L h r_s sqrt(M N ((omega + 2(N+1)chi)^2 + 2 N chi^2))),
/// assembled from cr_bound_tau and dtau2_drs.
BoundResult cr_bound_rs(const Probe& probe, const Geometry& geometry, double measurements);

/// Same bound with the order-q monomial information (asymptotic in N).
BoundResult cr_bound_rs_general_q(const Probe& probe, const Geometry& geometry,
                                  double measurements);

}  // namespace kerrmet

#endif  // KERRMET_BOUNDS_HPP
