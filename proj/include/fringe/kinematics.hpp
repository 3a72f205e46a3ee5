#pragma once

#include <cmath>
#include <stdexcept>

#include "fringe/constants.hpp"

namespace fringe {

/// Rest mass and lab-frame speed of a massive particle.
struct ParticleState {
  double rest_mass;  // kg, > 0
  double speed;      // m/s, in [0, c)

  ParticleState(double rest_mass_kg, double speed_mps)
      : rest_mass(rest_mass_kg), speed(speed_mps) {
    if (!(rest_mass > 0.0) || !std::isfinite(rest_mass))
      throw std::domain_error("rest_mass must be positive");
    if (!(speed >= 0.0) || !(speed < si::c))
      throw std::domain_error("speed outside [0, c)");
  }

  double beta() const { return speed / si::c; }
};

/// Derived relativistic quantities of a ParticleState.
struct KinematicState {
  double gamma;                // dimensionless, >= 1
  double relativistic_mass;    // kg, gamma * m0
  double momentum;             // kg m/s, gamma * m0 * v
  double total_energy;         // J, gamma * m0 c^2
  double internal_energy;      // J, m0 c^2 sqrt(1 - beta^2)
  double kinetic_term;         // J, gamma * m0 v^2
  double direction_angle_cos;  // v / c, in [0, 1]
};

/// Compton wavelength, its contraction by gamma, and the de Broglie
/// wavelength. Related by 1/lambda^2 = 1/de_broglie^2 + 1/compton^2.
struct WavelengthTriple {
  double compton;              // m, h / (m0 c)
  double transformed_compton;  // m, h / (m c) = compton / gamma
  double de_broglie;           // m, h / (m v) = compton / (gamma beta)
};

/// Lorentz factor 1/sqrt(1 - (v/c)^2).
inline double gamma(const ParticleState& state) {
  const double beta = state.beta();
  return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

/// Energy partition: total = gamma m0 c^2 splits into the velocity-dependent
/// internal part m0 c^2 / gamma and the kinetic term m v^2.
inline KinematicState kinematic_state(const ParticleState& state) {
  const double g = gamma(state);
  const double m = g * state.rest_mass;
  KinematicState ks;
  ks.gamma = g;
  ks.relativistic_mass = m;
  ks.momentum = m * state.speed;
  ks.total_energy = m * si::c * si::c;
  ks.internal_energy = state.rest_mass * si::c * si::c / g;
  ks.kinetic_term = m * state.speed * state.speed;
  ks.direction_angle_cos = state.beta();
  return ks;
}

/// Compton wavelength h / (m0 c) of a particle at rest.
inline double compton_wavelength(double rest_mass) {
  if (!(rest_mass > 0.0) || !std::isfinite(rest_mass))
    throw std::domain_error("rest_mass must be positive");
  return si::h / (rest_mass * si::c);
}

inline WavelengthTriple wavelengths(const ParticleState& state) {
  if (state.speed == 0.0)
    throw std::domain_error("de Broglie wavelength undefined at zero momentum");
  const double g = gamma(state);
  WavelengthTriple w;
  w.compton = compton_wavelength(state.rest_mass);
  w.transformed_compton = w.compton / g;
  w.de_broglie = w.compton / (g * state.beta());
  return w;
}

/// Normalized distance of the event (x0, y0, z0, w0; t) from the sphere
/// c^2 t^2 = x0^2 + y0^2 + z0^2 + w0^2: zero exactly on it.
inline double four_speed_residual(double x0, double y0, double z0, double w0,
                                  double t) {
  if (!(t > 0.0)) throw std::domain_error("t must be positive");
  const double ct2 = si::c * t * si::c * t;
  return (x0 * x0 + y0 * y0 + z0 * z0 + w0 * w0) / ct2 - 1.0;
}

}  // namespace fringe
