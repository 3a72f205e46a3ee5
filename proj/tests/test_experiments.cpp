// Interference setups: Fraunhofer two-slit pattern, Mach-Zehnder detector
// statistics, standing-wave cavity, and two independent sources.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fringe/experiments.hpp"
#include "fringe/philox.hpp"
#include "fringe/screen.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

// HeNe beam on 0.25 mm slits, 1 m away: fringe period 2.532 mm. The screen
// covers four periods so that fringe nulls land exactly on grid points.
fringe::TwoSlitConfig base_config() {
  fringe::TwoSlitConfig config;
  config.wavelength = 633e-9;
  config.slit_separation = 0.25e-3;
  config.slit_width = 40e-6;
  config.screen_distance = 1.0;
  config.screen_halfwidth =
      4.0 * config.wavelength * config.screen_distance / config.slit_separation;
  return config;
}

double fringe_period(const fringe::TwoSlitConfig& config) {
  return config.wavelength * config.screen_distance / config.slit_separation;
}

}  // namespace

TEST_CASE("two-slit density is normalized and centered") {
  const auto config = base_config();
  const auto intensity = fringe::two_slit_intensity(config);
  CHECK(std::abs(fringe::trapezoid_integral(intensity) - 1.0) < 1e-9);
  for (double d : intensity.density) CHECK(d >= 0.0);

  const std::size_t center = intensity.positions.size() / 2;
  const double peak =
      *std::max_element(intensity.density.begin(), intensity.density.end());
  CHECK(intensity.density[center] == peak);
}

TEST_CASE("two-slit nulls sit at half-integer fringe offsets") {
  const auto config = base_config();
  const auto intensity = fringe::two_slit_intensity(config);
  const double peak =
      *std::max_element(intensity.density.begin(), intensity.density.end());
  // 4097 points over 8 periods puts x = period/2 exactly on the grid.
  const std::size_t center = intensity.positions.size() / 2;
  const std::size_t null_index = center + (intensity.positions.size() - 1) / 16;
  CHECK(rel_diff(intensity.positions[null_index], fringe_period(config) / 2.0) <
        1e-12);
  CHECK(intensity.density[null_index] < 1e-12 * peak);
}

TEST_CASE("closing a slit removes the fringe modulation") {
  auto config = base_config();
  config.open_b = false;
  const auto single = fringe::two_slit_intensity(config);
  // Direct single-slit formula on the same grid.
  fringe::ScreenIntensity expected;
  expected.positions = single.positions;
  expected.density.resize(single.positions.size());
  for (std::size_t j = 0; j < expected.positions.size(); ++j) {
    const double u = kPi * config.slit_width * expected.positions[j] /
                     (config.wavelength * config.screen_distance);
    const double s = u == 0.0 ? 1.0 : std::sin(u) / u;
    expected.density[j] = s * s;
  }
  fringe::normalize(expected);
  for (std::size_t j = 0; j < expected.density.size(); ++j)
    CHECK(std::abs(single.density[j] - expected.density[j]) <=
          1e-12 * expected.density[0]);
}

TEST_CASE("two-slit validation") {
  auto config = base_config();
  config.open_a = false;
  config.open_b = false;
  CHECK_THROWS_MATCHES(fringe::two_slit_intensity(config), std::domain_error,
                       Catch::Matchers::Message("both slits closed"));

  config = base_config();
  config.screen_distance = 5.0 * config.slit_separation *
                           config.slit_separation / config.wavelength;
  CHECK_THROWS_MATCHES(fringe::two_slit_intensity(config), std::invalid_argument,
                       Catch::Matchers::Message("far-field approximation invalid"));

  config = base_config();
  config.wavelength = -1.0;
  CHECK_THROWS_WITH(fringe::two_slit_intensity(config),
                    Catch::Matchers::ContainsSubstring("wavelength"));

  config = base_config();
  config.slit_width = config.slit_separation;
  CHECK_THROWS_AS(fringe::two_slit_intensity(config), std::domain_error);
}

TEST_CASE("fringe spacing matches lambda L / d") {
  const auto config = base_config();
  const double spacing = fringe::fringe_spacing(fringe::two_slit_intensity(config));
  CHECK(rel_diff(spacing, 2.532e-3) < 0.02);

  // Halving the separation doubles the spacing (and keeps the far-field
  // bound satisfied at the same screen distance).
  auto narrower = config;
  narrower.slit_separation /= 2.0;
  narrower.slit_width /= 2.0;  // keep the envelope-to-period ratio fixed
  narrower.screen_halfwidth = 4.0 * fringe_period(narrower);
  const double doubled =
      fringe::fringe_spacing(fringe::two_slit_intensity(narrower));
  CHECK(rel_diff(doubled, 2.0 * spacing) < 0.02);

  auto single = config;
  single.open_b = false;
  CHECK_THROWS_MATCHES(fringe::fringe_spacing(fringe::two_slit_intensity(single)),
                       fringe::analysis_error,
                       Catch::Matchers::Message("insufficient fringes in window"));
}

TEST_CASE("fringe spacing law over random configurations") {
  fringe::UniformStream stream(99, 0);
  for (int i = 0; i < 50; ++i) {
    fringe::TwoSlitConfig config;
    config.wavelength = 400e-9 + 300e-9 * stream.next();
    config.slit_separation = 0.1e-3 + 0.4e-3 * stream.next();
    // Keep the slit narrow against the separation so the sinc envelope stays
    // flat across the window and the maxima sit on the lambda L / d comb.
    config.slit_width = config.slit_separation * (0.05 + 0.10 * stream.next());
    config.screen_distance = (1.1 + 2.0 * stream.next()) * 10.0 *
                             config.slit_separation * config.slit_separation /
                             config.wavelength;
    config.screen_halfwidth = 4.0 * fringe_period(config);
    const double spacing =
        fringe::fringe_spacing(fringe::two_slit_intensity(config));
    CHECK(rel_diff(spacing, fringe_period(config)) < 0.02);
  }
}

TEST_CASE("visibility of fringe and envelope patterns") {
  const auto config = base_config();
  const double half_period = fringe_period(config) / 2.0;

  const auto both = fringe::two_slit_intensity(config);
  CHECK(fringe::visibility(both, half_period) >= 0.99);

  auto single_config = config;
  single_config.open_b = false;
  const auto single = fringe::two_slit_intensity(single_config);
  CHECK(fringe::visibility(single, half_period) <= 0.05);

  fringe::ScreenIntensity uniform;
  uniform.positions = both.positions;
  uniform.density.assign(both.positions.size(),
                         0.5 / config.screen_halfwidth);
  CHECK(fringe::visibility(uniform, half_period) == 0.0);

  CHECK_THROWS_MATCHES(fringe::visibility(both, 2.0 * config.screen_halfwidth),
                       std::invalid_argument,
                       Catch::Matchers::Message("window outside screen"));
}

TEST_CASE("beamsplitter is unitary") {
  fringe::UniformStream stream(21, 3);
  for (int i = 0; i < 1000; ++i) {
    const std::complex<double> a{stream.next() - 0.5, stream.next() - 0.5};
    const std::complex<double> b{stream.next() - 0.5, stream.next() - 0.5};
    const auto [out1, out2] = fringe::beamsplitter(a, b);
    const double before = std::norm(a) + std::norm(b);
    const double after = std::norm(out1) + std::norm(out2);
    CHECK(std::abs(after - before) <= 1e-12 * before);
  }
}

TEST_CASE("mach-zehnder follows the phase law") {
  for (int k = 0; k <= 100; ++k) {
    const double phase = -kPi + 2.0 * kPi * static_cast<double>(k) / 100.0;
    const auto probs = fringe::mach_zehnder_probabilities({phase, true});
    const double expected = std::cos(phase / 2.0) * std::cos(phase / 2.0);
    CHECK(std::abs(probs.p1 - expected) < 1e-12);
    CHECK(std::abs(probs.p1 + probs.p2 - 1.0) < 1e-12);

    const auto open = fringe::mach_zehnder_probabilities({phase, false});
    CHECK(std::abs(open.p1 - 0.5) < 1e-12);
    CHECK(std::abs(open.p1 + open.p2 - 1.0) < 1e-12);
  }

  const auto aligned = fringe::mach_zehnder_probabilities({0.0, true});
  CHECK(std::abs(aligned.p1 - 1.0) < 1e-15);
  CHECK(std::abs(aligned.p2) < 1e-15);

  const auto opposed = fringe::mach_zehnder_probabilities({kPi, true});
  CHECK(std::abs(opposed.p1) < 1e-15);
  CHECK(std::abs(opposed.p2 - 1.0) < 1e-15);
}

TEST_CASE("resonance check") {
  const double wavelength = 633e-9;
  const auto fifth =
      fringe::resonance_check(2.5 * wavelength, wavelength, 1e-9);
  CHECK(fifth.resonant);
  CHECK(fifth.mode_number == 5);

  const auto detuned =
      fringe::resonance_check(1.3 * wavelength, wavelength, 1e-3);
  CHECK_FALSE(detuned.resonant);
  CHECK(detuned.mode_number == 3);

  const auto nudged = fringe::resonance_check(
      2.5 * wavelength * (1.0 + 1e-12), wavelength, 1e-9);
  CHECK(nudged.resonant);
  CHECK(nudged.mode_number == 5);
}

TEST_CASE("cavity profile vanishes at the nodes") {
  const double wavelength = 633e-9;
  const fringe::CavityConfig config{2.5 * wavelength, wavelength};
  // 511 points: 510 segments divide evenly by mode 5, so every node is a
  // grid point.
  const auto profile = fringe::cavity_profile(config, 511);
  CHECK(std::abs(fringe::trapezoid_integral(profile) - 1.0) < 1e-9);

  const double peak =
      *std::max_element(profile.density.begin(), profile.density.end());
  for (int node = 0; node <= 5; ++node) {
    const std::size_t index = static_cast<std::size_t>(node) * 510 / 5;
    CHECK(profile.density[index] < 1e-12 * peak);
  }
  // Antinode at lambda/4: grid index 51 of 510 segments.
  CHECK(rel_diff(profile.density[51], peak) < 1e-6);

  CHECK_THROWS_MATCHES(
      fringe::cavity_profile({1.3 * wavelength, wavelength}, 511),
      std::domain_error, Catch::Matchers::Message("cavity not resonant"));
  CHECK_THROWS_AS(fringe::cavity_profile(config, 32), std::invalid_argument);
}

TEST_CASE("two independent sources interfere shot by shot") {
  const double wavelength = 633e-9;
  const double separation = 0.25e-3;
  const double distance = 1.0;
  const double period = wavelength * distance / separation;
  const double halfwidth = 2.0 * period;  // normalization phase-independent

  const auto centered = fringe::two_laser_intensity(
      wavelength, separation, distance, halfwidth, 0.0);
  CHECK(std::abs(fringe::trapezoid_integral(centered) - 1.0) < 1e-9);
  const std::size_t center = centered.positions.size() / 2;
  const double peak =
      *std::max_element(centered.density.begin(), centered.density.end());
  CHECK(centered.density[center] == peak);

  const auto shifted = fringe::two_laser_intensity(
      wavelength, separation, distance, halfwidth, kPi);
  const double low =
      *std::min_element(shifted.density.begin(), shifted.density.end());
  CHECK(shifted.density[center] <= low * (1.0 + 1e-9) + 1e-12 * peak);

  CHECK(fringe::visibility(centered, halfwidth) >= 0.99);
}

TEST_CASE("phase-averaged two-laser pattern washes out") {
  const double wavelength = 633e-9;
  const double separation = 0.25e-3;
  const double distance = 1.0;
  const double period = wavelength * distance / separation;
  const double halfwidth = 2.0 * period;
  const int shots = 1000;

  std::vector<double> average;
  for (int k = 0; k < shots; ++k) {
    const double phase = 2.0 * kPi * static_cast<double>(k) /
                         static_cast<double>(shots);
    const auto shot = fringe::two_laser_intensity(wavelength, separation,
                                                  distance, halfwidth, phase,
                                                  1025);
    if (average.empty()) average.assign(shot.density.size(), 0.0);
    for (std::size_t j = 0; j < average.size(); ++j)
      average[j] += shot.density[j] / static_cast<double>(shots);
  }
  const double uniform = 0.5 / halfwidth;
  for (double value : average) CHECK(std::abs(value / uniform - 1.0) < 1e-3);
}
