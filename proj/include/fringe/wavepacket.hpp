#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "fringe/constants.hpp"
#include "fringe/kinematics.hpp"
#include "fringe/vec3.hpp"

namespace fringe {

enum class PacketKind { massive, photon };

/// A rigid wave packet: a carrier wave exp(i(k_c s - w_c t)) riding under a
/// unit-peak Gaussian envelope exp(-(s - u t)^2 / (2 sigma^2)), where s is
/// the coordinate along `direction`. The envelope translates at the group
/// speed u without changing shape.
struct PacketSpec {
  PacketKind kind = PacketKind::photon;
  double carrier_wavenumber = 0.0;         // 1/m
  double carrier_angular_frequency = 0.0;  // rad/s
  double group_speed = 0.0;                // m/s
  Vec3 direction{0.0, 0.0, 1.0};           // unit vector
  double envelope_width = 0.0;             // m, the Gaussian sigma
  double amplitude_norm = 1.0;             // peak |B|
};

/// Discretization report for the d'Alembert operator applied to a packet's
/// longitudinal profile.
struct ResidualReport {
  double grid_spacing = 0.0;       // m
  double residual_norm = 0.0;      // RMS residual / (RMS |B| / sigma^2)
  double convergence_order = 0.0;  // log2 of the norm ratio between h and h/2
};

namespace detail {

inline void check_unit_direction(const Vec3& direction) {
  if (std::abs(norm(direction) - 1.0) > 1e-12)
    throw std::domain_error("direction must be a unit vector");
}

inline void check_envelope_width(double envelope_width) {
  if (!(envelope_width > 0.0) || !std::isfinite(envelope_width))
    throw std::domain_error("envelope_width must be positive and finite");
}

}  // namespace detail

/// Packet for a massive particle: carrier wavenumber p/hbar along the motion,
/// angular frequency gamma m0 c^2 / hbar, group speed v.
inline PacketSpec make_massive_packet(const ParticleState& state,
                                      const Vec3& direction,
                                      double envelope_width) {
  if (state.speed == 0.0)
    throw std::domain_error("massive packet requires speed > 0");
  detail::check_unit_direction(direction);
  detail::check_envelope_width(envelope_width);
  const double g = gamma(state);
  PacketSpec spec;
  spec.kind = PacketKind::massive;
  spec.carrier_wavenumber = g * state.rest_mass * state.speed / si::hbar;
  spec.carrier_angular_frequency = g * state.rest_mass * si::c * si::c / si::hbar;
  spec.group_speed = state.speed;
  spec.direction = direction;
  spec.envelope_width = envelope_width;
  return spec;
}

/// Photon packet: carrier wavenumber 2 pi nu / c, group speed c.
inline PacketSpec make_photon_packet(double frequency, const Vec3& direction,
                                     double envelope_width) {
  if (!(frequency > 0.0) || !std::isfinite(frequency))
    throw std::domain_error("frequency must be positive");
  detail::check_unit_direction(direction);
  detail::check_envelope_width(envelope_width);
  PacketSpec spec;
  spec.kind = PacketKind::photon;
  spec.carrier_angular_frequency = 2.0 * std::numbers::pi * frequency;
  spec.carrier_wavenumber = spec.carrier_angular_frequency / si::c;
  spec.group_speed = si::c;
  spec.direction = direction;
  spec.envelope_width = envelope_width;
  return spec;
}

/// Default envelope: ten carrier wavelengths, wide enough to separate the
/// carrier and envelope scales.
inline PacketSpec make_massive_packet(const ParticleState& state,
                                      const Vec3& direction) {
  PacketSpec spec = make_massive_packet(state, direction, 1.0);
  spec.envelope_width = 10.0 * (2.0 * std::numbers::pi / spec.carrier_wavenumber);
  return spec;
}

inline PacketSpec make_photon_packet(double frequency, const Vec3& direction) {
  PacketSpec spec = make_photon_packet(frequency, direction, 1.0);
  spec.envelope_width = 10.0 * (2.0 * std::numbers::pi / spec.carrier_wavenumber);
  return spec;
}

/// Packet amplitude at longitudinal coordinate s and time t.
inline std::complex<double> longitudinal_amplitude(const PacketSpec& spec,
                                                   double s, double t) {
  const double xi = s - spec.group_speed * t;
  const double sigma = spec.envelope_width;
  const double envelope = std::exp(-xi * xi / (2.0 * sigma * sigma));
  const double phase =
      spec.carrier_wavenumber * s - spec.carrier_angular_frequency * t;
  return std::polar(spec.amplitude_norm * envelope, phase);
}

/// Packet amplitude at a point in space and time.
inline std::complex<double> evaluate(const PacketSpec& spec,
                                     const Vec3& position, double time) {
  return longitudinal_amplitude(spec, dot(spec.direction, position), time);
}

/// Carrier frequency in Hz; h times this is the packet energy.
inline double phase_frequency(const PacketSpec& spec) {
  return spec.carrier_angular_frequency / (2.0 * std::numbers::pi);
}

/// Phase rate p^2 / (2 m0 hbar) with p = m0 v, the low-speed limit of the
/// carrier frequency once the rest-energy rate m0 c^2 / hbar is removed.
inline double nonrelativistic_phase_rate(const ParticleState& state) {
  const double p = state.rest_mass * state.speed;
  return p * p / (2.0 * state.rest_mass * si::hbar);
}

/// RMS of the discretized operator d^2/(c^2 dt^2) - d^2/ds^2 applied to an
/// arbitrary longitudinal field, sampled at t = 0 on a grid of spacing h
/// covering [-window_halfwidth, window_halfwidth]. Central second
/// differences in both variables; `time_step` is the dt of the time stencil.
template <class Field>
double wave_operator_residual_rms(Field&& field, double grid_spacing,
                                  double window_halfwidth, double time_step) {
  const double h = grid_spacing;
  const double dt = time_step;
  const auto points = static_cast<std::ptrdiff_t>(window_halfwidth / h);
  double sum = 0.0;
  std::size_t count = 0;
  for (std::ptrdiff_t j = -points; j <= points; ++j) {
    const double s = static_cast<double>(j) * h;
    const std::complex<double> center = field(s, 0.0);
    const std::complex<double> time_diff =
        (field(s, dt) - 2.0 * center + field(s, -dt)) / (si::c * si::c * dt * dt);
    const std::complex<double> space_diff =
        (field(s + h, 0.0) - 2.0 * center + field(s - h, 0.0)) / (h * h);
    sum += std::norm(time_diff - space_diff);
    ++count;
  }
  return std::sqrt(sum / static_cast<double>(count));
}

/// Residual of the discretized wave equation on the packet's longitudinal
/// profile, at spacing h and h/2. The residual norm is the RMS residual
/// divided by RMS|B| / sigma^2. Time step is h / (2c): the unit-CFL step h/c
/// makes the two stencils cancel exactly on any profile of s - ct, leaving
/// nothing to converge, so the check runs at half that.
inline ResidualReport wave_equation_residual(const PacketSpec& spec,
                                             double grid_spacing,
                                             double window_halfwidth) {
  const double sigma = spec.envelope_width;
  if (!(grid_spacing > 0.0) || grid_spacing >= sigma / 8.0)
    throw std::invalid_argument("grid under-resolves packet");
  if (spec.carrier_wavenumber > 0.0 &&
      grid_spacing >= (2.0 * std::numbers::pi / spec.carrier_wavenumber) / 4.0)
    throw std::invalid_argument("grid under-resolves packet");
  if (!(window_halfwidth >= 4.0 * sigma))
    throw std::invalid_argument(
        "window_halfwidth must be at least 4 envelope widths");

  const auto profile = [&spec](double s, double t) {
    return longitudinal_amplitude(spec, s, t);
  };
  const auto norm_at = [&](double h) {
    const double rms_residual =
        wave_operator_residual_rms(profile, h, window_halfwidth, h / (2.0 * si::c));
    // Field scale |B| / sigma^2, measured on the same grid.
    const auto points = static_cast<std::ptrdiff_t>(window_halfwidth / h);
    double sum = 0.0;
    std::size_t count = 0;
    for (std::ptrdiff_t j = -points; j <= points; ++j) {
      sum += std::norm(profile(static_cast<double>(j) * h, 0.0));
      ++count;
    }
    const double rms_field = std::sqrt(sum / static_cast<double>(count));
    return rms_residual / (rms_field / (sigma * sigma));
  };

  ResidualReport report;
  report.grid_spacing = grid_spacing;
  report.residual_norm = norm_at(grid_spacing);
  const double finer = norm_at(grid_spacing / 2.0);
  report.convergence_order =
      (report.residual_norm > 0.0 && finer > 0.0)
          ? std::log2(report.residual_norm / finer)
          : 0.0;
  return report;
}

/// Gaussian sigma-parameter recovered from the second moment of |B|^2 along
/// the propagation direction at the given time. The squared envelope has RMS
/// width sigma / sqrt(2), so the recovered value is sqrt(2) times the
/// measured RMS width; it equals envelope_width at every time.
inline double envelope_width_at(const PacketSpec& spec, double time,
                                double grid_spacing) {
  const double sigma = spec.envelope_width;
  if (!(grid_spacing > 0.0) || grid_spacing >= sigma / 8.0)
    throw std::invalid_argument("grid under-resolves packet");
  const double peak = spec.group_speed * time;
  const auto points =
      static_cast<std::ptrdiff_t>(std::ceil(8.0 * sigma / grid_spacing));
  double weight_sum = 0.0, first_moment = 0.0;
  for (std::ptrdiff_t j = -points; j <= points; ++j) {
    const double xi = static_cast<double>(j) * grid_spacing;
    const double trapezoid = (j == -points || j == points) ? 0.5 : 1.0;
    const double w = trapezoid * std::norm(longitudinal_amplitude(spec, peak + xi, time));
    weight_sum += w;
    first_moment += w * xi;
  }
  const double mean = first_moment / weight_sum;
  double second_moment = 0.0;
  for (std::ptrdiff_t j = -points; j <= points; ++j) {
    const double xi = static_cast<double>(j) * grid_spacing;
    const double trapezoid = (j == -points || j == points) ? 0.5 : 1.0;
    const double w = trapezoid * std::norm(longitudinal_amplitude(spec, peak + xi, time));
    second_moment += w * (xi - mean) * (xi - mean);
  }
  return std::sqrt(2.0 * second_moment / weight_sum);
}

}  // namespace fringe
