#include "pointpat/stone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pointpat/errors.hpp"

namespace pointpat {

namespace {

std::vector<int> equal_bin_counts(const std::vector<double>& samples, double lo,
                                  double range, int m) {
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  for (double s : samples) {
    int i = static_cast<int>(std::floor((s - lo) / range * m));
    if (i >= m) i = m - 1;
    if (i < 0) i = 0;
    ++counts[static_cast<std::size_t>(i)];
  }
  return counts;
}

}  // namespace

StoneResult stone_optimal_bins(const std::vector<double>& samples, int c) {
  if (samples.size() < 2) throw EmptyPattern("stone_optimal_bins needs at least 2 samples");
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double lo = *lo_it, hi = *hi_it;
  if (!(lo < hi)) throw DegenerateSpan("all samples equal");
  const double range = hi - lo;
  const double n = static_cast<double>(samples.size());

  StoneResult result;
  result.scores.reserve(static_cast<std::size_t>(c));
  double best = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= c; ++m) {
    const std::vector<int> counts = equal_bin_counts(samples, lo, range, m);
    double sum_pi2 = 0.0;
    for (int cnt : counts) {
      const double pi = static_cast<double>(cnt) / n;
      sum_pi2 += pi * pi;
    }
    const double v = range / m;
    const double k = (2.0 / n - sum_pi2) / v;
    result.scores.push_back({m, k});
    if (k < best) {
      best = k;
      result.m_hat = m;
    }
  }
  return result;
}

Histogram1D fixed_bin_histogram(const std::vector<double>& samples, int m) {
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double lo = *lo_it, hi = *hi_it;
  if (!(lo < hi)) throw DegenerateSpan("all samples equal");
  Histogram1D hist;
  hist.m = m;
  hist.lo = lo;
  hist.hi = hi;
  hist.counts = equal_bin_counts(samples, lo, hi - lo, m);
  const double n = static_cast<double>(samples.size());
  const double v = (hi - lo) / m;
  hist.heights.reserve(hist.counts.size());
  for (int cnt : hist.counts) hist.heights.push_back(static_cast<double>(cnt) / (n * v));
  return hist;
}

double histogram_density_distance(const Histogram1D& hist,
                                  const std::function<double(double)>& true_pdf,
                                  int p, double quadrature_step) {
  if (p != 1 && p != 2) throw Error("p must be 1 or 2");
  if (!(quadrature_step > 0)) throw Error("quadrature_step must be positive");
  const double v = hist.bin_width();
  double mass = 0.0;
  for (double h : hist.heights) mass += h * v;
  if (std::abs(mass - 1.0) > 1e-6) throw BadNorm("histogram not normalized");

  const double range = hist.hi - hist.lo;
  const long steps = std::max<long>(1, std::lround(range / quadrature_step));
  const double dx = range / static_cast<double>(steps);
  double acc = 0.0;
  for (long i = 0; i < steps; ++i) {
    const double x = hist.lo + (static_cast<double>(i) + 0.5) * dx;
    int bin = static_cast<int>(std::floor((x - hist.lo) / range * hist.m));
    if (bin >= hist.m) bin = hist.m - 1;
    const double diff = std::abs(hist.heights[static_cast<std::size_t>(bin)] - true_pdf(x));
    acc += (p == 1 ? diff : diff * diff) * dx;
  }
  return p == 1 ? acc : std::sqrt(acc);
}

}  // namespace pointpat
