#include "pointpat/knuth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pointpat {

namespace {

constexpr double kTieTol = 1e-12;

// lgamma(1/2) = log(sqrt(pi)), kept exact rather than via std::lgamma.
const double kLgammaHalf = 0.5 * std::log(M_PI);

}  // namespace

double log_posterior_from_counts(const std::vector<int>& counts, int bin_count,
                                 double span_area) {
  long n = 0;
  for (int c : counts) n += c;
  const double m = static_cast<double>(bin_count);
  double value = static_cast<double>(n) * std::log(m / span_area);
  value += std::lgamma(m / 2.0) - m * kLgammaHalf;
  for (int c : counts) value += std::lgamma(c + 0.5);
  value -= std::lgamma(static_cast<double>(n) + m / 2.0);
  return value;
}

double log_posterior(const PointPattern& pattern, const BinGrid& grid) {
  if (pattern.size() < 1) throw EmptyPattern("log_posterior needs at least 1 point");
  const std::vector<int> counts = bin_counts(grid, pattern.points);
  return log_posterior_from_counts(counts, grid.bin_count(), grid.span.area());
}

namespace {

// Posterior mean / variance of the per-unit-area density in each bin.
OptimalHistogram make_histogram(const BinGrid& grid, std::vector<int> counts,
                                double log_post) {
  const double m = static_cast<double>(grid.bin_count());
  const double v = grid.span.area();
  long n = 0;
  for (int c : counts) n += c;
  const double nn = static_cast<double>(n);
  OptimalHistogram hist{grid, std::move(counts), {}, {}, log_post};
  hist.heights_mean.reserve(hist.counts.size());
  hist.heights_var.reserve(hist.counts.size());
  const double scale = m / v;
  const double denom = nn + m / 2.0;
  for (int c : hist.counts) {
    const double nk = static_cast<double>(c);
    hist.heights_mean.push_back(scale * (nk + 0.5) / denom);
    hist.heights_var.push_back(scale * scale * (nk + 0.5) *
                               (nn - nk + (m - 1.0) / 2.0) /
                               ((denom + 1.0) * denom * denom));
  }
  return hist;
}

}  // namespace

std::pair<OptimalHistogram, LogPosteriorSurface> optimal_binning(
    const PointPattern& pattern, const KnuthSearchConfig& config,
    std::optional<Window> span_override) {
  if (pattern.size() < 2) throw EmptyPattern("optimal_binning needs at least 2 points");
  if (config.c_x < 1 || config.c_y < 1) throw Error("bin caps must be >= 1");
  const Window span = span_override ? *span_override : data_span(pattern);

  LogPosteriorSurface surface;
  surface.c_x = config.c_x;
  surface.c_y = config.c_y;
  surface.values.resize(static_cast<std::size_t>(config.c_x) * config.c_y);

  double best = -std::numeric_limits<double>::infinity();
  int best_mx = 1, best_my = 1;
  for (int my = 1; my <= config.c_y; ++my) {
    for (int mx = 1; mx <= config.c_x; ++mx) {
      const BinGrid grid(mx, my, span);
      const double value = log_posterior(pattern, grid);
      surface.values[static_cast<std::size_t>((my - 1) * config.c_x + (mx - 1))] = value;
      if (value > best + kTieTol) {
        best = value;
        best_mx = mx;
        best_my = my;
      } else if (value > best - kTieTol) {
        // tie: prefer smaller M, then smaller m_x
        const long m_new = static_cast<long>(mx) * my;
        const long m_old = static_cast<long>(best_mx) * best_my;
        if (m_new < m_old || (m_new == m_old && mx < best_mx)) {
          best = std::max(best, value);
          best_mx = mx;
          best_my = my;
        }
      }
    }
  }
  surface.argmax_mx = best_mx;
  surface.argmax_my = best_my;

  const BinGrid map_grid(best_mx, best_my, span);
  std::vector<int> counts = bin_counts(map_grid, pattern.points);
  return {make_histogram(map_grid, std::move(counts), surface.at(best_mx, best_my)),
          surface};
}

Knuth1DResult optimal_binning_1d(const std::vector<double>& samples, int c) {
  if (samples.size() < 2) throw EmptyPattern("optimal_binning_1d needs at least 2 samples");
  if (c < 1) throw Error("bin cap must be >= 1");
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double lo = *lo_it, hi = *hi_it;
  if (!(lo < hi)) throw DegenerateSpan("all samples equal");
  const double range = hi - lo;
  const double nn = static_cast<double>(samples.size());

  Knuth1DResult result;
  result.log_posterior.reserve(static_cast<std::size_t>(c));
  double best = -std::numeric_limits<double>::infinity();
  int best_m = 1;
  std::vector<int> best_counts;
  for (int m = 1; m <= c; ++m) {
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    for (double s : samples) {
      int i = static_cast<int>(std::floor((s - lo) / range * m));
      if (i >= m) i = m - 1;
      if (i < 0) i = 0;
      ++counts[static_cast<std::size_t>(i)];
    }
    const double value = log_posterior_from_counts(counts, m, range);
    result.log_posterior.push_back(value);
    if (value > best + kTieTol) {
      best = value;
      best_m = m;
      best_counts = std::move(counts);
    }
  }

  result.m_hat = best_m;
  result.histogram.m = best_m;
  result.histogram.lo = lo;
  result.histogram.hi = hi;
  result.histogram.counts = best_counts;
  const double mm = static_cast<double>(best_m);
  const double denom = nn + mm / 2.0;
  result.histogram.heights.reserve(best_counts.size());
  for (int cnt : best_counts)
    result.histogram.heights.push_back((mm / range) * (cnt + 0.5) / denom);
  return result;
}

}  // namespace pointpat
