#ifndef KERRMET_FEASIBILITY_HPP
#define KERRMET_FEASIBILITY_HPP

namespace kerrmet {

/// Material and pulse parameters for converting a classical nonlinear-index
/// measurement into the per-photon Kerr rate used by the bounds.
struct FeasibilityInput {
  double n_tilde = 0.0;         ///< second-order refractive index, m^2/W
  double n0 = 1.0;              ///< linear refractive index
  double area = 0.0;            ///< beam area, m^2
  double pulse_duration = 0.0;  ///< s
  double omega = 0.0;           ///< rad/s
  double photons = 0.0;         ///< photons per pulse

  void validate() const;
};

struct MaterialChi {
  double chi_prime = 0.0;  ///< phase shift per photon: (n~/n0) hbar omega / (A dt)
  double chi = 0.0;        ///< Kerr rate: (n0/2) omega chi'
};

/// chi' = (n~/n0) (hbar omega / (A dt)) and chi = (n0/2) omega chi'.
MaterialChi chi_from_material(const FeasibilityInput& input);

/// Peak power of a pulse: P = N hbar omega / dt, W.
double peak_power(double photons, double omega, double pulse_duration);

/// Average power at repetition rate M per second: N hbar omega M, W.
double average_power(double photons, double omega, double repetition_rate);

/// Kerr rate implied by a measured single-photon nonlinear phase phi over a
/// fibre of length L and index n0: chi = phi c / (n0 L).
double chi_from_single_photon_phase(double phase, double fibre_length, double n0);

}  // namespace kerrmet

#endif  // KERRMET_FEASIBILITY_HPP
