#ifndef KERRMET_FOCK_HPP
#define KERRMET_FOCK_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "kerrmet/errors.hpp"

namespace kerrmet {

/// Which photon-number exponent drives the self-phase modulation:
/// shifted_quadratic applies exp(i chi tau n(n+1)), monomial applies
/// exp(i chi tau n^q).  For q = 2 the two differ by an n-linear term that is
/// absorbable into the carrier frequency (omega -> omega + chi).
enum class KerrVariant { shifted_quadratic, monomial };

/// Optical probe entering the nonlinear medium.  The mean photon number is
/// |alpha|^2 by construction, so it can never drift out of sync with the
/// amplitude.
struct Probe {
  std::complex<double> alpha;                           ///< coherent amplitude
  double omega = 0.0;                                   ///< angular frequency, rad/s
  double chi = 0.0;                                     ///< Kerr strength, rad/s
  int q = 2;                                            ///< nonlinearity order (monomial)
  KerrVariant variant = KerrVariant::shifted_quadratic;

  double photon_number() const { return std::norm(alpha); }

  static Probe from_photon_number(double n_a, double omega, double chi, int q = 2,
                                  KerrVariant variant = KerrVariant::shifted_quadratic);

  /// Throws std::invalid_argument on omega < 0, chi < 0 or q < 2.
  void validate() const;
};

/// Pure state in the truncated photon-number basis.  amplitudes[n] is the
/// coefficient of |n>, n = 0..cutoff.
struct FockState {
  std::vector<std::complex<double>> amplitudes;

  int cutoff() const { return static_cast<int>(amplitudes.size()) - 1; }
  /// Squared norm; 1 - norm2() is the truncation deficit.
  double norm2() const;
};

/// Smallest cutoff of the form ceil(N + c sqrt(N+1)), with c grown from 10
/// until the truncated coherent-state norm reaches 1 - tol_trunc.
/// Deterministic in its inputs.
int default_cutoff(double n_a, double tol_trunc = 1e-12);

/// Coherent state |alpha> truncated at `cutoff`.  Amplitudes are evaluated in
/// the log domain so photon numbers beyond the factorial overflow point stay
/// finite.  Throws truncation_error (with the achieved norm) if the cutoff
/// cannot hold the squared norm above 1 - tol_trunc.
FockState coherent_state(std::complex<double> alpha, int cutoff, double tol_trunc = 1e-12);

/// Applies exp(i chi tau f(n) + i n omega tau) amplitude-wise, where f is the
/// probe's exponent variant.  Norm is preserved exactly.
FockState kerr_evolve(const FockState& state, const Probe& probe, double tau);

/// <a|b> over the common range; the shorter vector is implicitly zero-padded.
std::complex<double> overlap(const FockState& a, const FockState& b);

/// |<a|b>|^2, the pure-state fidelity.
double fidelity(const FockState& a, const FockState& b);

/// <n> of a (possibly truncated) state, without renormalizing.
double mean_photon_number(const FockState& state);

/// Step selection for the finite-difference quantum Fisher information.
/// The step is chosen so the predicted H dtau^2 lands on `target_h_dtau2`
/// (kept within [1e-8, 1e-4] so the fidelity drop is resolvable in doubles
/// but still in the quadratic regime), then the estimate is refined by
/// Richardson extrapolation from dtau and dtau/2.
struct StepPolicy {
  double target_h_dtau2 = 1e-5;
  double convergence_tol = 1e-3;
  int max_cutoff = 1 << 21;
};

struct NumericQfi {
  double value = 0.0;        ///< Richardson-refined estimate, 1/s^2
  double coarse = 0.0;       ///< raw estimate at dtau
  double fine = 0.0;         ///< raw estimate at dtau/2
  double convergence = 0.0;  ///< |fine - coarse| / (3 |value|)
  double dtau = 0.0;
  int cutoff = 0;
  bool converged = true;
};

/// Brute-force quantum Fisher information for the Kerr-evolved coherent
/// probe: H = lim 8 (1 - sqrt(F(tau, tau + dtau))) / dtau^2 evaluated on the
/// truncated Fock representation at two step sizes.  This is the oracle the
/// closed-form expressions are tested against; it never consults them.
/// Throws convergence_error when the two steps disagree beyond the policy
/// tolerance.
NumericQfi numeric_qfi(const Probe& probe, double tau, const StepPolicy& policy = {});

}  // namespace kerrmet

#endif  // KERRMET_FOCK_HPP
