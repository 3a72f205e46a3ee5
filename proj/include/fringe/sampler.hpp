#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fringe/experiments.hpp"
#include "fringe/philox.hpp"
#include "fringe/screen.hpp"

namespace fringe {

/// Addresses one reproducible draw sequence. Equal (seed, stream_index)
/// always replays the same draws; distinct stream_index values give
/// independent streams that may be consumed concurrently.
struct SeededStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;
};

/// Binned arrival counts. Positions outside the range land in `overflow`
/// and are excluded from `total`.
struct Histogram {
  std::vector<double> bin_edges;     // size bins + 1, uniform
  std::vector<std::uint64_t> counts; // size bins
  std::uint64_t total = 0;           // in-range count
  std::uint64_t overflow = 0;
};

struct FitReport {
  double chi_square_per_dof = 0.0;
  std::size_t dof = 0;
  std::size_t bins_merged = 0;  // bins pooled to keep expected counts >= 5
};

/// n i.i.d. arrival positions from the screen density, via inverse CDF of
/// the trapezoid cumulative.
inline std::vector<double> sample_positions(const ScreenIntensity& intensity,
                                            std::size_t n,
                                            const SeededStream& stream) {
  const TrapezoidCdf cdf(intensity);
  UniformStream uniforms(stream.seed, stream.stream_index);
  std::vector<double> positions;
  positions.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    positions.push_back(cdf.inverse(uniforms.next()));
  return positions;
}

/// Left-closed uniform binning of positions over [range_min, range_max).
inline Histogram accumulate(const std::vector<double>& positions,
                            std::size_t bin_count, double range_min,
                            double range_max) {
  if (bin_count < 2) throw std::invalid_argument("bin_count must be at least 2");
  if (!(range_max > range_min))
    throw std::invalid_argument("histogram range is degenerate");
  Histogram hist;
  hist.bin_edges.resize(bin_count + 1);
  const double width = (range_max - range_min) / static_cast<double>(bin_count);
  for (std::size_t j = 0; j <= bin_count; ++j)
    hist.bin_edges[j] = range_min + static_cast<double>(j) * width;
  hist.counts.assign(bin_count, 0);
  for (double x : positions) {
    if (x < range_min || x >= range_max) {
      ++hist.overflow;
      continue;
    }
    auto bin = static_cast<std::size_t>((x - range_min) / width);
    if (bin >= bin_count) bin = bin_count - 1;  // guards rounding at the top edge
    ++hist.counts[bin];
    ++hist.total;
  }
  return hist;
}

/// Adds counts of histograms with identical binning. Associative and
/// commutative, so partitioning samples across streams and merging gives
/// the same statistics as one serial pass.
inline Histogram merge(const Histogram& a, const Histogram& b) {
  if (a.bin_edges != b.bin_edges)
    throw std::invalid_argument("histograms have different binning");
  Histogram out = a;
  for (std::size_t j = 0; j < out.counts.size(); ++j)
    out.counts[j] += b.counts[j];
  out.total += b.total;
  out.overflow += b.overflow;
  return out;
}

/// Expected count in each bin under the screen density: total times the
/// trapezoid mass of the bin.
inline std::vector<double> expected_counts(const Histogram& hist,
                                           const ScreenIntensity& intensity) {
  const TrapezoidCdf cdf(intensity);
  std::vector<double> expected(hist.counts.size());
  for (std::size_t j = 0; j < expected.size(); ++j)
    expected[j] = static_cast<double>(hist.total) *
                  cdf.segment_mass(hist.bin_edges[j], hist.bin_edges[j + 1]);
  return expected;
}

/// Pearson chi-square of the histogram against the screen density. Bins are
/// pooled walking from both edges toward the center until every pooled group
/// has expected count >= 5 (leftover low groups merge into a neighbor);
/// dof = groups - 1.
inline FitReport goodness_of_fit(const Histogram& hist,
                                 const ScreenIntensity& intensity) {
  if (hist.total < 100)
    throw std::invalid_argument("histogram total below 100");
  const std::vector<double> expected = expected_counts(hist, intensity);
  const std::size_t n = expected.size();

  struct Group {
    double expected = 0.0;
    double observed = 0.0;
  };
  std::vector<Group> left, right;
  std::size_t lo = 0, hi = n;
  Group current;
  while (lo < hi) {  // left edge inward over the first half
    current.expected += expected[lo];
    current.observed += static_cast<double>(hist.counts[lo]);
    ++lo;
    if (current.expected >= 5.0) {
      left.push_back(current);
      current = Group{};
    }
    if (lo > n / 2) break;
  }
  Group leftover = current;
  current = Group{};
  while (hi > lo) {  // right edge inward
    --hi;
    current.expected += expected[hi];
    current.observed += static_cast<double>(hist.counts[hi]);
    if (current.expected >= 5.0) {
      right.push_back(current);
      current = Group{};
    }
  }
  // Whatever remains below threshold joins the nearest closed group.
  leftover.expected += current.expected;
  leftover.observed += current.observed;
  if (leftover.expected > 0.0 || leftover.observed > 0.0) {
    if (leftover.expected >= 5.0) {
      left.push_back(leftover);
    } else if (!left.empty()) {
      left.back().expected += leftover.expected;
      left.back().observed += leftover.observed;
    } else if (!right.empty()) {
      right.back().expected += leftover.expected;
      right.back().observed += leftover.observed;
    } else {
      throw std::invalid_argument("expected counts too small to pool");
    }
  }

  double chi_square = 0.0;
  std::size_t groups = 0;
  for (const auto& side : {left, right})
    for (const Group& g : side) {
      const double diff = g.observed - g.expected;
      chi_square += diff * diff / g.expected;
      ++groups;
    }
  if (groups < 2) throw std::invalid_argument("fewer than two pooled bins");
  FitReport report;
  report.dof = groups - 1;
  report.chi_square_per_dof = chi_square / static_cast<double>(report.dof);
  report.bins_merged = n - groups;
  return report;
}

/// Binomial split of n arrivals between two detectors.
inline std::pair<std::uint64_t, std::uint64_t> sample_detectors(
    const DetectorProbabilities& probs, std::size_t n,
    const SeededStream& stream) {
  UniformStream uniforms(stream.seed, stream.stream_index);
  std::uint64_t first = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (uniforms.next() < probs.p1) ++first;
  return {first, static_cast<std::uint64_t>(n) - first};
}

}  // namespace fringe
