#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fringe/errors.hpp"
#include "fringe/screen.hpp"

namespace fringe {

/// Two parallel slits in a barrier, far-field screen behind them.
struct TwoSlitConfig {
  double wavelength = 0.0;       // m
  double slit_separation = 0.0;  // m, center to center
  double slit_width = 0.0;       // m, 0 < a < d
  double screen_distance = 0.0;  // m
  double screen_halfwidth = 0.0; // m
  bool open_a = true;
  bool open_b = true;
};

struct MachZehnderConfig {
  double phase_difference = 0.0;  // rad, from the arm path difference
  bool second_beamsplitter_present = true;
};

struct DetectorProbabilities {
  double p1 = 0.0;
  double p2 = 0.0;
};

struct CavityConfig {
  double cavity_length = 0.0;  // m
  double wavelength = 0.0;     // m
};

struct ResonanceResult {
  bool resonant = false;
  long mode_number = 0;  // nearest integer count of half-wavelengths
};

inline constexpr double kDefaultResonanceTolerance = 1e-9;

namespace detail {

inline double sinc(double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sin(u) / u;
}

inline void check_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw std::domain_error(std::string(name) + " must be > 0");
}

inline void check_far_field(double wavelength, double separation,
                            double distance) {
  if (distance < 10.0 * separation * separation / wavelength)
    throw std::invalid_argument("far-field approximation invalid");
}

inline std::vector<double> uniform_grid(double lo, double hi,
                                        std::size_t points) {
  if (points < 2) throw std::invalid_argument("grid needs at least two points");
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t j = 0; j < points; ++j)
    grid[j] = lo + static_cast<double>(j) * step;
  return grid;
}

}  // namespace detail

inline void validate(const TwoSlitConfig& config) {
  detail::check_positive(config.wavelength, "wavelength");
  detail::check_positive(config.slit_separation, "slit_separation");
  detail::check_positive(config.slit_width, "slit_width");
  detail::check_positive(config.screen_distance, "screen_distance");
  detail::check_positive(config.screen_halfwidth, "screen_halfwidth");
  if (config.slit_width >= config.slit_separation)
    throw std::domain_error("slit_width must be smaller than slit_separation");
  if (!config.open_a && !config.open_b)
    throw std::domain_error("both slits closed");
  detail::check_far_field(config.wavelength, config.slit_separation,
                          config.screen_distance);
}

/// Fraunhofer screen density: sinc^2 single-slit envelope, times cos^2
/// fringes when both slits are open.
inline ScreenIntensity two_slit_intensity(const TwoSlitConfig& config,
                                          std::size_t grid_points = 4097) {
  validate(config);
  const double scale = config.wavelength * config.screen_distance;
  ScreenIntensity intensity;
  intensity.positions = detail::uniform_grid(-config.screen_halfwidth,
                                             config.screen_halfwidth, grid_points);
  intensity.density.resize(grid_points);
  const bool both = config.open_a && config.open_b;
  for (std::size_t j = 0; j < grid_points; ++j) {
    const double x = intensity.positions[j];
    const double envelope =
        detail::sinc(std::numbers::pi * config.slit_width * x / scale);
    double value = envelope * envelope;
    if (both) {
      const double fringes =
          std::cos(std::numbers::pi * config.slit_separation * x / scale);
      value *= fringes * fringes;
    }
    intensity.density[j] = value;
  }
  normalize(intensity);
  return intensity;
}

/// Mean spacing of the central comb of local maxima. Gaps far from the
/// median (e.g. where the envelope suppresses a fringe below threshold) are
/// discarded before averaging.
inline double fringe_spacing(const ScreenIntensity& intensity) {
  const auto& d = intensity.density;
  const double peak = *std::max_element(d.begin(), d.end());
  const double threshold = 1e-6 * peak;
  std::vector<double> maxima;
  for (std::size_t j = 1; j + 1 < d.size(); ++j)
    if (d[j] > d[j - 1] && d[j] > d[j + 1] && d[j] > threshold)
      maxima.push_back(intensity.positions[j]);
  if (maxima.size() < 3)
    throw analysis_error("insufficient fringes in window");
  std::vector<double> gaps(maxima.size() - 1);
  for (std::size_t j = 0; j + 1 < maxima.size(); ++j)
    gaps[j] = maxima[j + 1] - maxima[j];
  std::vector<double> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[(sorted.size() - 1) / 2];
  double sum = 0.0;
  std::size_t kept = 0;
  for (double gap : gaps)
    if (gap >= 0.5 * median && gap <= 1.5 * median) {
      sum += gap;
      ++kept;
    }
  return sum / static_cast<double>(kept);
}

/// (I_max - I_min) / (I_max + I_min) over |x| <= window_halfwidth.
inline double visibility(const ScreenIntensity& intensity,
                         double window_halfwidth) {
  detail::check_positive(window_halfwidth, "window_halfwidth");
  if (window_halfwidth > intensity.positions.back() ||
      -window_halfwidth < intensity.positions.front())
    throw std::invalid_argument("window outside screen");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t j = 0; j < intensity.positions.size(); ++j) {
    if (std::abs(intensity.positions[j]) > window_halfwidth) continue;
    lo = std::min(lo, intensity.density[j]);
    hi = std::max(hi, intensity.density[j]);
  }
  if (!(hi + lo > 0.0)) throw std::domain_error("window has zero intensity");
  return (hi - lo) / (hi + lo);
}

/// Symmetric 50/50 splitter: transmitted amplitude 1/sqrt(2), reflected
/// i/sqrt(2). Unitary, so total squared amplitude is preserved.
inline std::pair<std::complex<double>, std::complex<double>> beamsplitter(
    std::complex<double> a, std::complex<double> b) {
  constexpr std::complex<double> i{0.0, 1.0};
  const double root2 = std::numbers::sqrt2;
  return {(a + i * b) / root2, (i * a + b) / root2};
}

/// Detector statistics for one photon through the interferometer. Detector 1
/// is the port that collects everything at zero phase difference. With the
/// second splitter removed each detector sees one arm, so the phase cannot
/// matter.
inline DetectorProbabilities mach_zehnder_probabilities(
    const MachZehnderConfig& config) {
  auto [arm_a, arm_b] = beamsplitter({1.0, 0.0}, {0.0, 0.0});
  arm_a *= std::polar(1.0, config.phase_difference);
  DetectorProbabilities probs;
  if (config.second_beamsplitter_present) {
    const auto [out1, out2] = beamsplitter(arm_a, arm_b);
    probs.p1 = std::norm(out2);
    probs.p2 = std::norm(out1);
  } else {
    probs.p1 = std::norm(arm_a);
    probs.p2 = std::norm(arm_b);
  }
  return probs;
}

inline void validate(const CavityConfig& config) {
  detail::check_positive(config.cavity_length, "cavity_length");
  detail::check_positive(config.wavelength, "wavelength");
  if (!(config.cavity_length > config.wavelength / 2.0))
    throw std::domain_error("cavity_length must exceed half a wavelength");
}

/// True iff the length is an integer number of half-wavelengths within
/// tolerance; mode_number is the nearest such integer.
inline ResonanceResult resonance_check(
    double cavity_length, double wavelength,
    double tolerance = kDefaultResonanceTolerance) {
  detail::check_positive(cavity_length, "cavity_length");
  detail::check_positive(wavelength, "wavelength");
  const double half = wavelength / 2.0;
  ResonanceResult result;
  result.mode_number = std::max(1L, std::lround(cavity_length / half));
  result.resonant =
      std::abs(cavity_length - static_cast<double>(result.mode_number) * half) <=
      tolerance * half;
  return result;
}

/// Standing-wave intensity sin^2(2 pi x / lambda) over [0, L], normalized.
/// Zero at every node x = n lambda / 2.
inline ScreenIntensity cavity_profile(
    const CavityConfig& config, std::size_t grid_points,
    double resonance_tolerance = kDefaultResonanceTolerance) {
  validate(config);
  if (grid_points < 64)
    throw std::invalid_argument("grid_points must be at least 64");
  if (!resonance_check(config.cavity_length, config.wavelength,
                       resonance_tolerance)
           .resonant)
    throw std::domain_error("cavity not resonant");
  ScreenIntensity intensity;
  intensity.positions =
      detail::uniform_grid(0.0, config.cavity_length, grid_points);
  intensity.density.resize(grid_points);
  const double k = 2.0 * std::numbers::pi / config.wavelength;
  for (std::size_t j = 0; j < grid_points; ++j) {
    const double s = std::sin(k * intensity.positions[j]);
    intensity.density[j] = s * s;
  }
  normalize(intensity);
  return intensity;
}

/// Far-field pattern of two mutually coherent beams with a fixed relative
/// phase: cos^2 fringes whose position shifts with the phase. Averaging over
/// a uniform phase washes the pattern out; each single shot still interferes.
inline ScreenIntensity two_laser_intensity(double wavelength,
                                           double effective_slit_separation,
                                           double screen_distance,
                                           double screen_halfwidth,
                                           double relative_phase,
                                           std::size_t grid_points = 4097) {
  detail::check_positive(wavelength, "wavelength");
  detail::check_positive(effective_slit_separation, "effective_slit_separation");
  detail::check_positive(screen_distance, "screen_distance");
  detail::check_positive(screen_halfwidth, "screen_halfwidth");
  detail::check_far_field(wavelength, effective_slit_separation, screen_distance);
  ScreenIntensity intensity;
  intensity.positions =
      detail::uniform_grid(-screen_halfwidth, screen_halfwidth, grid_points);
  intensity.density.resize(grid_points);
  const double scale = wavelength * screen_distance;
  for (std::size_t j = 0; j < grid_points; ++j) {
    const double x = intensity.positions[j];
    const double c =
        std::cos(std::numbers::pi * effective_slit_separation * x / scale +
                 relative_phase / 2.0);
    intensity.density[j] = c * c;
  }
  normalize(intensity);
  return intensity;
}

}  // namespace fringe
