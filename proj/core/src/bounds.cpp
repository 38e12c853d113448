#include "kerrmet/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "kerrmet/constants.hpp"

namespace kerrmet {

namespace {

void require_variant(const Probe& probe, KerrVariant variant, const char* who) {
  if (probe.variant != variant) {
    throw std::invalid_argument(std::string(who) + ": wrong probe variant");
  }
}

void require_measurements(double measurements) {
  if (!(measurements >= 1.0)) {
    throw std::invalid_argument("measurement count M must be >= 1");
  }
}

// Common assembly of a relative r_s bound from a tau-information value:
// 1 / (r_s |dtau2/drs| sqrt(M H)).
double rs_bound_from_qfi(const QfiResult& qfi, const Geometry& g, double measurements) {
  g.validate();
  require_measurements(measurements);
  if (!(g.r_s > 0.0)) {
    throw std::domain_error("relative error is undefined at r_s = 0");
  }
  if (!(g.h > 0.0)) {
    throw std::invalid_argument("arm separation h must be > 0 for an r_s bound");
  }
  const double slope = std::abs(dtau2_drs(g));
  return cr_bound_tau(qfi, measurements) / (g.r_s * slope);
}

}  // namespace

const char* to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::fisher: return "fisher";
    case BoundMethod::fisher_q: return "fisher_q";
    case BoundMethod::quadrature: return "quadrature";
    case BoundMethod::sql: return "sql";
    case BoundMethod::squeezed_lossy: return "squeezed_lossy";
  }
  return "unknown";
}

double second_order_fidelity_coefficient(const Probe& probe) {
  probe.validate();
  require_variant(probe, KerrVariant::shifted_quadratic, "second_order_fidelity_coefficient");
  const double n = probe.photon_number();
  const double chi = probe.chi;
  const double omega = probe.omega;
  return n * (2.0 * (2.0 + 5.0 * n + 2.0 * n * n) * chi * chi +
              4.0 * (1.0 + n) * chi * omega + omega * omega);
}

double fidelity_second_order(const Probe& probe, double dtau) {
  return 1.0 - dtau * dtau * second_order_fidelity_coefficient(probe);
}

double second_order_validity_metric(const Probe& probe, double dtau) {
  return std::abs(dtau) * std::sqrt(qfi_kerr(probe).value);
}

double qfi_from_fidelity_expansion(const Probe& probe, double dtau) {
  const double c = second_order_fidelity_coefficient(probe);
  const double f = 1.0 - c * dtau * dtau;
  // 8 (1 - sqrt(F)) / dtau^2 == 8C / (1 + sqrt(F)); the right-hand side has
  // no cancellation and reaches the limit 4C once C dtau^2 drops below the
  // rounding of sqrt.
  return 8.0 * c / (1.0 + std::sqrt(std::max(f, 0.0)));
}

QfiResult qfi_kerr(const Probe& probe) {
  probe.validate();
  require_variant(probe, KerrVariant::shifted_quadratic, "qfi_kerr");
  const double n = probe.photon_number();
  const double bracket = probe.omega + 2.0 * (n + 1.0) * probe.chi;
  return {4.0 * n * (bracket * bracket + 2.0 * n * probe.chi * probe.chi),
          QfiSource::analytic_kerr, false};
}

QfiResult qfi_general_q(const Probe& probe) {
  probe.validate();
  require_variant(probe, KerrVariant::monomial, "qfi_general_q");
  const double n = probe.photon_number();
  const double bracket = probe.q * probe.chi * std::pow(n, probe.q - 1) + probe.omega;
  return {4.0 * n * bracket * bracket, QfiSource::analytic_q, true};
}

double cr_bound_tau(const QfiResult& qfi, double measurements) {
  require_measurements(measurements);
  if (!(qfi.value > 0.0)) {
    throw std::invalid_argument("zero quantum Fisher information: estimator variance is unbounded");
  }
  return 1.0 / std::sqrt(measurements * qfi.value);
}

BoundResult cr_bound_rs(const Probe& probe, const Geometry& g, double measurements) {
  BoundResult result;
  result.relative_error = rs_bound_from_qfi(qfi_kerr(probe), g, measurements);
  result.method = BoundMethod::fisher;
  result.inputs = {probe, g, measurements, 1.0, 1.0};
  return result;
}

BoundResult cr_bound_rs_general_q(const Probe& probe, const Geometry& g,
                                  double measurements) {
  BoundResult result;
  result.relative_error = rs_bound_from_qfi(qfi_general_q(probe), g, measurements);
  result.method = BoundMethod::fisher_q;
  result.inputs = {probe, g, measurements, 1.0, 1.0};
  return result;
}

}  // namespace kerrmet
