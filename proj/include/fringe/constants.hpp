#pragma once

#include <numbers>

namespace fringe::si {

/// Speed of light in vacuum in m/s (exact, CODATA 2018)
inline constexpr double c = 299792458.0;
/// Planck constant in J s (exact, CODATA 2018)
inline constexpr double h = 6.62607015e-34;
/// Reduced Planck constant in J s (derived, h / 2pi)
inline constexpr double hbar = h / (2.0 * std::numbers::pi);
/// Electron rest mass in kg (CODATA 2018)
inline constexpr double electron_mass = 9.1093837015e-31;

}  // namespace fringe::si
