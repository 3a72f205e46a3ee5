#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fringe {

/// Normalized 1-D arrival probability density sampled on a uniform grid.
/// The trapezoid integral of density over positions is 1.
struct ScreenIntensity {
  std::vector<double> positions;  // m, uniform, strictly increasing
  std::vector<double> density;    // 1/m, >= 0
};

inline double trapezoid_integral(const ScreenIntensity& intensity) {
  const auto& x = intensity.positions;
  const auto& d = intensity.density;
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < x.size(); ++j)
    sum += 0.5 * (d[j] + d[j + 1]) * (x[j + 1] - x[j]);
  return sum;
}

/// Scales density so the trapezoid integral is 1.
inline void normalize(ScreenIntensity& intensity) {
  const double total = trapezoid_integral(intensity);
  if (!(total > 0.0))
    throw std::domain_error("intensity integrates to zero, cannot normalize");
  for (double& d : intensity.density) d /= total;
}

/// Cumulative distribution of a piecewise-linear density on a uniform grid.
/// Piecewise quadratic; exact per-segment inversion, so inverse-CDF sampling
/// and bin-mass evaluation share one definition.
class TrapezoidCdf {
 public:
  explicit TrapezoidCdf(const ScreenIntensity& intensity)
      : positions_(intensity.positions), density_(intensity.density) {
    const std::size_t n = positions_.size();
    if (n < 2 || density_.size() != n)
      throw std::invalid_argument("intensity needs at least two grid points");
    spacing_ = (positions_.back() - positions_.front()) /
               static_cast<double>(n - 1);
    if (!(spacing_ > 0.0))
      throw std::invalid_argument("positions must be increasing");
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double step = positions_[j + 1] - positions_[j];
      if (std::abs(step - spacing_) > 1e-12 * spacing_)
        throw std::invalid_argument("positions must form a uniform grid");
    }
    for (double d : density_)
      if (!(d >= 0.0)) throw std::invalid_argument("density must be nonnegative");

    cumulative_.resize(n);
    cumulative_[0] = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j)
      cumulative_[j + 1] =
          cumulative_[j] + 0.5 * (density_[j] + density_[j + 1]) * spacing_;
    const double total = cumulative_.back();
    if (!(total > 0.0)) throw std::invalid_argument("density integrates to zero");
    for (double& c : cumulative_) c /= total;
    for (double& d : density_) d /= total;
  }

  double min() const { return positions_.front(); }
  double max() const { return positions_.back(); }

  /// CDF value at x; 0 left of the grid, 1 right of it.
  double cdf(double x) const {
    if (x <= positions_.front()) return 0.0;
    if (x >= positions_.back()) return 1.0;
    const auto j = static_cast<std::size_t>((x - positions_.front()) / spacing_);
    const std::size_t seg = std::min(j, positions_.size() - 2);
    const double xi = x - positions_[seg];
    const double slope = (density_[seg + 1] - density_[seg]) / spacing_;
    const double value =
        cumulative_[seg] + density_[seg] * xi + 0.5 * slope * xi * xi;
    return std::clamp(value, 0.0, 1.0);
  }

  /// Position with CDF value u, for u in [0, 1).
  double inverse(double u) const {
    const auto it =
        std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto seg = static_cast<std::size_t>(
        std::clamp<std::ptrdiff_t>(it - cumulative_.begin() - 1, 0,
                                   static_cast<std::ptrdiff_t>(cumulative_.size()) - 2));
    const double du = u - cumulative_[seg];
    if (du <= 0.0) return positions_[seg];
    const double d0 = density_[seg];
    const double slope = (density_[seg + 1] - density_[seg]) / spacing_;
    // Solve d0 xi + slope xi^2 / 2 = du in its cancellation-free form.
    const double disc = std::sqrt(std::max(0.0, d0 * d0 + 2.0 * slope * du));
    const double denom = d0 + disc;
    if (denom <= 0.0) return positions_[seg];
    const double xi = std::clamp(2.0 * du / denom, 0.0, spacing_);
    return positions_[seg] + xi;
  }

  /// Probability mass of [a, b].
  double segment_mass(double a, double b) const { return cdf(b) - cdf(a); }

 private:
  std::vector<double> positions_;
  std::vector<double> density_;     // rescaled so the total mass is 1
  std::vector<double> cumulative_;  // at grid nodes, 0 .. 1
  double spacing_ = 0.0;
};

}  // namespace fringe
