#ifndef KERRMET_ERRORS_HPP
#define KERRMET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kerrmet {

/// A requested Fock cutoff cannot hold the state to the declared tolerance.
class truncation_error : public std::runtime_error {
 public:
  truncation_error(const std::string& what, double achieved_norm2)
      : std::runtime_error(what), achieved_norm2_(achieved_norm2) {}
  double achieved_norm2() const noexcept { return achieved_norm2_; }

 private:
  double achieved_norm2_;
};

/// A finite-difference limit did not settle across step sizes.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double coarse, double fine)
      : std::runtime_error(what), coarse_(coarse), fine_(fine) {}
  double coarse_estimate() const noexcept { return coarse_; }
  double fine_estimate() const noexcept { return fine_; }

 private:
  double coarse_;
  double fine_;
};

/// The linearized measurement model is outside its validity region.
class validity_error : public std::runtime_error {
 public:
  validity_error(const std::string& what, double metric)
      : std::runtime_error(what), metric_(metric) {}
  /// Value of chi * tau * sqrt(N) that violated the threshold.
  double metric() const noexcept { return metric_; }

 private:
  double metric_;
};

/// The estimator inversion is ill-posed (e.g. zero signal slope).
class estimation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration file is malformed, has unknown keys, or invalid values.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kerrmet

#endif  // KERRMET_ERRORS_HPP
