#include "kerrmet/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace kerrmet {

namespace {

// Photon-number exponent of the self-phase unitary.
// Exact in double for n well below 2^53^(1/q).
double phase_exponent(const Probe& probe, int n) {
  if (probe.variant == KerrVariant::shifted_quadratic) {
    return static_cast<double>(n) * (static_cast<double>(n) + 1.0);
  }
  double f = 1.0;
  for (int k = 0; k < probe.q; ++k) f *= static_cast<double>(n);
  return f;
}

// Poisson(n_a) mass below or at `cutoff`, evaluated term-wise in the log
// domain.
double poisson_mass(double n_a, int cutoff) {
  if (n_a == 0.0) return 1.0;
  const double ln_na = std::log(n_a);
  long double mass = 0.0L;
  for (int n = 0; n <= cutoff; ++n) {
    mass += std::exp(-n_a + n * ln_na - std::lgamma(n + 1.0));
  }
  return static_cast<double>(std::min(mass, 1.0L));
}

}  // namespace

Probe Probe::from_photon_number(double n_a, double omega, double chi, int q,
                                KerrVariant variant) {
  if (!(n_a >= 0.0)) throw std::invalid_argument("photon number must be >= 0");
  Probe probe;
  probe.alpha = std::sqrt(n_a);
  probe.omega = omega;
  probe.chi = chi;
  probe.q = q;
  probe.variant = variant;
  probe.validate();
  return probe;
}

void Probe::validate() const {
  if (!(omega >= 0.0)) throw std::invalid_argument("omega must be >= 0");
  if (!(chi >= 0.0)) throw std::invalid_argument("chi must be >= 0");
  if (q < 2) throw std::invalid_argument("nonlinearity order q must be >= 2");
}

double FockState::norm2() const {
  long double s = 0.0L;
  for (const auto& a : amplitudes) s += std::norm(a);
  return static_cast<double>(s);
}

int default_cutoff(double n_a, double tol_trunc) {
  if (!(n_a >= 0.0)) throw std::invalid_argument("photon number must be >= 0");
  if (!(tol_trunc > 0.0 && tol_trunc < 1.0)) {
    throw std::invalid_argument("truncation tolerance must be in (0, 1)");
  }
  if (n_a > 2e6) {
    throw std::invalid_argument(
        "photon number too large for a truncated Fock representation; "
        "the exact oracle is meant for small-N validation");
  }
  const double spread = std::sqrt(n_a + 1.0);
  for (int c = 10;; ++c) {
    const int cutoff = static_cast<int>(std::ceil(n_a + c * spread));
    if (poisson_mass(n_a, cutoff) >= 1.0 - tol_trunc) return cutoff;
    if (c > 2000) {
      throw std::runtime_error("default_cutoff failed to reach the requested norm");
    }
  }
}

FockState coherent_state(std::complex<double> alpha, int cutoff, double tol_trunc) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
  FockState state;
  state.amplitudes.assign(static_cast<std::size_t>(cutoff) + 1, {0.0, 0.0});

  const double n_a = std::norm(alpha);
  if (n_a == 0.0) {
    state.amplitudes[0] = 1.0;
    return state;
  }

  const double ln_mag = std::log(std::abs(alpha));
  const double arg = std::arg(alpha);
  long double norm2 = 0.0L;
  for (int n = 0; n <= cutoff; ++n) {
    const double mag = std::exp(-0.5 * n_a + n * ln_mag - 0.5 * std::lgamma(n + 1.0));
    state.amplitudes[n] = std::polar(mag, n * arg);
    norm2 += static_cast<long double>(mag) * mag;
  }

  const double achieved = static_cast<double>(norm2);
  if (achieved < 1.0 - tol_trunc) {
    throw truncation_error("coherent state cutoff " + std::to_string(cutoff) +
                               " holds squared norm " + std::to_string(achieved) +
                               " < 1 - tolerance",
                           achieved);
  }
  return state;
}

FockState kerr_evolve(const FockState& state, const Probe& probe, double tau) {
  probe.validate();
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  FockState out = state;
  for (int n = 0; n <= out.cutoff(); ++n) {
    const double phase = probe.chi * tau * phase_exponent(probe, n) + n * probe.omega * tau;
    out.amplitudes[n] *= std::polar(1.0, phase);
  }
  return out;
}

std::complex<double> overlap(const FockState& a, const FockState& b) {
  const std::size_t n = std::min(a.amplitudes.size(), b.amplitudes.size());
  // Accumulate in extended precision: the fidelity differences taken from
  // this sum sit many orders below 1.
  long double re = 0.0L;
  long double im = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> term = std::conj(a.amplitudes[i]) * b.amplitudes[i];
    re += term.real();
    im += term.imag();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

double fidelity(const FockState& a, const FockState& b) {
  return std::norm(overlap(a, b));
}

double mean_photon_number(const FockState& state) {
  long double s = 0.0L;
  for (int n = 0; n <= state.cutoff(); ++n) {
    s += static_cast<long double>(n) * std::norm(state.amplitudes[n]);
  }
  return static_cast<double>(s);
}

NumericQfi numeric_qfi(const Probe& probe, double tau, const StepPolicy& policy) {
  probe.validate();
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  if (!(policy.target_h_dtau2 >= 1e-8 && policy.target_h_dtau2 <= 1e-4)) {
    throw std::invalid_argument("step policy target H dtau^2 must lie in [1e-8, 1e-4]");
  }

  const double n_a = probe.photon_number();
  const int cutoff = default_cutoff(n_a, 1e-12);
  if (cutoff > policy.max_cutoff) {
    throw std::invalid_argument("photon number too large for the Fock oracle cutoff");
  }
  const FockState base = coherent_state(probe.alpha, cutoff);

  // Moment-based step predictor: H ~ 4 Var(g) over the truncated photon
  // distribution, g(n) = chi f(n) + omega n.  Used only to size dtau.
  long double w = 0.0L, m1 = 0.0L, m2 = 0.0L;
  for (int n = 0; n <= cutoff; ++n) {
    const long double p = std::norm(base.amplitudes[n]);
    const long double g = probe.chi * phase_exponent(probe, n) + probe.omega * n;
    w += p;
    m1 += p * g;
    m2 += p * g * g;
  }
  m1 /= w;
  m2 /= w;
  const double h_pred = static_cast<double>(4.0L * (m2 - m1 * m1));

  NumericQfi result;
  result.cutoff = cutoff;
  if (!(h_pred > std::numeric_limits<double>::min())) {
    // tau-independent state (up to a global phase): zero information.
    return result;
  }

  const double dtau = std::sqrt(policy.target_h_dtau2 / h_pred);
  const FockState at_tau = kerr_evolve(base, probe, tau);
  const double base_norm2 = at_tau.norm2();

  const auto estimate = [&](double step) {
    const FockState shifted = kerr_evolve(base, probe, tau + step);
    // Normalize so the truncation deficit (common to both states) does not
    // masquerade as a fidelity drop.
    const double f = fidelity(at_tau, shifted) / (base_norm2 * base_norm2);
    const double drop = 1.0 - std::sqrt(std::min(f, 1.0));
    return 8.0 * drop / (step * step);
  };

  result.dtau = dtau;
  result.coarse = estimate(dtau);
  result.fine = estimate(0.5 * dtau);
  // The fidelity is even in dtau, so the raw estimates carry an O(dtau^2)
  // error that Richardson extrapolation removes.
  const double refined = (4.0 * result.fine - result.coarse) / 3.0;
  const double scale = std::max(std::abs(refined), std::numeric_limits<double>::min());
  result.convergence = std::abs(result.fine - result.coarse) / (3.0 * scale);
  if (result.convergence > policy.convergence_tol) {
    throw convergence_error("numeric QFI did not converge across step sizes: " +
                                std::to_string(result.coarse) + " at dtau vs " +
                                std::to_string(result.fine) + " at dtau/2",
                            result.coarse, result.fine);
  }
  result.value = std::max(refined, 0.0);
  return result;
}

}  // namespace kerrmet
