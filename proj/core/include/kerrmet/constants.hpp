#ifndef KERRMET_CONSTANTS_HPP
#define KERRMET_CONSTANTS_HPP

namespace kerrmet {

/// Speed of light in vacuum, m/s (exact SI value).
inline constexpr double speed_of_light = 299'792'458.0;

/// Reduced Planck constant, J s (2019 SI).
inline constexpr double hbar = 1.054571817e-34;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double half_pi = pi / 2.0;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace kerrmet

#endif  // KERRMET_CONSTANTS_HPP
