#include "kerrmet/feasibility.hpp"

#include <stdexcept>

#include "kerrmet/constants.hpp"

namespace kerrmet {

void FeasibilityInput::validate() const {
  if (!(n_tilde > 0.0)) throw std::invalid_argument("n_tilde must be > 0");
  if (!(n0 >= 1.0)) throw std::invalid_argument("n0 must be >= 1");
  if (!(area > 0.0)) throw std::invalid_argument("beam area must be > 0");
  if (!(pulse_duration > 0.0)) throw std::invalid_argument("pulse duration must be > 0");
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
  if (!(photons > 0.0)) throw std::invalid_argument("photons per pulse must be > 0");
}

MaterialChi chi_from_material(const FeasibilityInput& input) {
  input.validate();
  MaterialChi out;
  out.chi_prime = (input.n_tilde / input.n0) * hbar * input.omega /
                  (input.area * input.pulse_duration);
  out.chi = 0.5 * input.n0 * input.omega * out.chi_prime;
  return out;
}

double peak_power(double photons, double omega, double pulse_duration) {
  if (!(photons > 0.0 && omega > 0.0 && pulse_duration > 0.0)) {
    throw std::invalid_argument("peak power requires positive N, omega, dt");
  }
  return photons * hbar * omega / pulse_duration;
}

double average_power(double photons, double omega, double repetition_rate) {
  if (!(photons > 0.0 && omega > 0.0 && repetition_rate > 0.0)) {
    throw std::invalid_argument("average power requires positive N, omega, M");
  }
  return photons * hbar * omega * repetition_rate;
}

double chi_from_single_photon_phase(double phase, double fibre_length, double n0) {
  if (!(phase > 0.0 && fibre_length > 0.0 && n0 >= 1.0)) {
    throw std::invalid_argument("phase back-out requires positive phase, length, n0 >= 1");
  }
  // phi = chi * tau with tau = n0 L / c the traversal time in the medium.
  return phase * speed_of_light / (n0 * fibre_length);
}

}  // namespace kerrmet
