#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pointpat/geometry.hpp"
#include "pointpat/histogram.hpp"

namespace pointpat {

struct KnuthSearchConfig {
  int c_x = 50;  // max bins per axis
  int c_y = 50;
};

/// Log-posterior value for every candidate grid (m_x, m_y) in
/// [1,c_x] x [1,c_y], all sharing the same arbitrary additive constant.
struct LogPosteriorSurface {
  int c_x = 0, c_y = 0;
  std::vector<double> values;  // row-major, index (my-1)*c_x + (mx-1)
  int argmax_mx = 1, argmax_my = 1;

  double at(int mx, int my) const {
    return values[static_cast<std::size_t>((my - 1) * c_x + (mx - 1))];
  }
};

struct Knuth1DResult {
  Histogram1D histogram;
  int m_hat = 1;
  std::vector<double> log_posterior;  // index m-1, m in [1, c]
};

/// Log of the bin-number posterior for a fixed grid, up to the additive
/// constant shared by all grids over the same data:
///   N log(M/V) + lgamma(M/2) - M lgamma(1/2)
///   + sum_k lgamma(n_k + 1/2) - lgamma(N + M/2).
double log_posterior(const PointPattern& pattern, const BinGrid& grid);

/// Same quantity from precomputed counts (N = sum counts, V = span area).
double log_posterior_from_counts(const std::vector<int>& counts, int bin_count,
                                 double span_area);

/// Exhaustive MAP search over all grids up to the per-axis caps; the span
/// defaults to the data bounding box.  Ties (within 1e-12) break toward
/// smaller M, then smaller m_x.
std::pair<OptimalHistogram, LogPosteriorSurface> optimal_binning(
    const PointPattern& pattern, const KnuthSearchConfig& config = {},
    std::optional<Window> span_override = std::nullopt);

Knuth1DResult optimal_binning_1d(const std::vector<double>& samples, int c = 50);

}  // namespace pointpat
