#include "pointpat/secondstats.hpp"

#include <algorithm>
#include <cmath>

#include "pointpat/generators.hpp"

namespace pointpat {

double arc_fraction(const Window& window, const Point& center, double r) {
  if (!(r > 0)) return 1.0;
  const double d_left = center.x - window.x_min;
  const double d_right = window.x_max - center.x;
  const double d_bottom = center.y - window.y_min;
  const double d_top = window.y_max - center.y;

  auto side_angle = [r](double d) { return d < r ? 2.0 * std::acos(d / r) : 0.0; };
  double outside = side_angle(d_left) + side_angle(d_right) + side_angle(d_bottom) +
                   side_angle(d_top);

  // the outside arcs of two adjacent crossed sides overlap when the
  // corner lies inside the circle
  auto corner_overlap = [r](double dx, double dy) {
    if (dx * dx + dy * dy >= r * r) return 0.0;
    return std::acos(dx / r) + std::acos(dy / r) - M_PI / 2.0;
  };
  outside -= corner_overlap(d_left, d_bottom) + corner_overlap(d_left, d_top) +
             corner_overlap(d_right, d_bottom) + corner_overlap(d_right, d_top);

  double w = 1.0 - outside / (2.0 * M_PI);
  return std::max(w, 1e-12);
}

std::vector<double> default_r_grid(const PointPattern& pattern, int n,
                                   std::optional<double> lo) {
  const double hi = std::min(pattern.window.width(), pattern.window.height()) / 2.0;
  const double start = lo ? *lo : default_bandwidth(pattern);
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    grid[static_cast<std::size_t>(i)] =
        start + (hi - start) * static_cast<double>(i) / static_cast<double>(n - 1);
  return grid;
}

double default_bandwidth(const PointPattern& pattern) {
  if (pattern.size() < 1) throw EmptyPattern("empty pattern");
  const double lambda_hat = static_cast<double>(pattern.size()) / pattern.window.area();
  return 0.15 / std::sqrt(lambda_hat);
}

namespace {

struct WeightedPair {
  double dist;
  double weight;  // 1/w(s_i,s_j) + 1/w(s_j,s_i)
};

void check_range(const PointPattern& pattern, const std::vector<double>& r_grid) {
  const double bound =
      std::min(pattern.window.width(), pattern.window.height()) / 2.0;
  if (!r_grid.empty() && r_grid.back() > bound * (1.0 + 1e-12))
    throw RangeTooLarge("r exceeds half the shorter window side");
}

// unordered pairs with both ordered edge-correction weights folded in
std::vector<WeightedPair> weighted_pairs(const PointPattern& pattern, double d_max) {
  const auto& pts = pattern.points;
  std::vector<WeightedPair> pairs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = distance(pts[i], pts[j]);
      if (d > d_max) continue;
      const double w = 1.0 / arc_fraction(pattern.window, pts[i], d) +
                       1.0 / arc_fraction(pattern.window, pts[j], d);
      pairs.push_back({d, w});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const WeightedPair& a, const WeightedPair& b) { return a.dist < b.dist; });
  return pairs;
}

}  // namespace

CurveEstimate ripley_k(const PointPattern& pattern, const std::vector<double>& r_grid) {
  if (pattern.size() < 2) throw EmptyPattern("ripley_k needs at least 2 points");
  check_range(pattern, r_grid);
  const double n = static_cast<double>(pattern.size());
  const double a0 = pattern.window.area();
  const std::vector<WeightedPair> pairs = weighted_pairs(pattern, r_grid.back());

  CurveEstimate curve{r_grid, {}, StatisticKind::K};
  curve.values.reserve(r_grid.size());
  double acc = 0.0;
  std::size_t idx = 0;
  for (double r : r_grid) {
    while (idx < pairs.size() && pairs[idx].dist <= r) acc += pairs[idx++].weight;
    curve.values.push_back(acc * a0 / (n * n));
  }
  return curve;
}

CurveEstimate l_function(const CurveEstimate& k) {
  if (k.statistic_kind != StatisticKind::K) throw Error("l_function expects a K curve");
  CurveEstimate curve{k.r_grid, {}, StatisticKind::L};
  curve.values.reserve(k.values.size());
  for (std::size_t i = 0; i < k.values.size(); ++i) {
    if (k.values[i] < 0) throw NegativeK("negative K value");
    curve.values.push_back(std::sqrt(k.values[i] / M_PI) - k.r_grid[i]);
  }
  return curve;
}

CurveEstimate pair_correlation(const PointPattern& pattern,
                               const std::vector<double>& r_grid,
                               double smoothing_bandwidth) {
  if (pattern.size() < 2) throw EmptyPattern("pair_correlation needs at least 2 points");
  if (!(smoothing_bandwidth > 0)) throw Error("bandwidth must be positive");
  if (r_grid.front() < smoothing_bandwidth)
    throw Error("r_grid must start at or above the smoothing bandwidth");
  check_range(pattern, r_grid);

  const double n = static_cast<double>(pattern.size());
  const double lambda_hat = n / pattern.window.area();
  const double b = smoothing_bandwidth;
  const std::vector<WeightedPair> pairs =
      weighted_pairs(pattern, r_grid.back() + b);

  CurveEstimate curve{r_grid, std::vector<double>(r_grid.size(), 0.0), StatisticKind::G};
  for (const WeightedPair& pr : pairs) {
    // Epanechnikov kernel of half-width b on the distance axis
    const auto lo = std::lower_bound(r_grid.begin(), r_grid.end(), pr.dist - b);
    for (auto it = lo; it != r_grid.end() && *it < pr.dist + b; ++it) {
      const double t = (*it - pr.dist) / b;
      const double kern = 0.75 / b * (1.0 - t * t);
      curve.values[static_cast<std::size_t>(it - r_grid.begin())] +=
          kern * pr.weight / (2.0 * M_PI * *it * lambda_hat * n);
    }
  }
  return curve;
}

CurveEstimate k2_index(const CurveEstimate& g, int window_pts) {
  if (g.statistic_kind != StatisticKind::G) throw Error("k2_index expects a g curve");
  if (g.r_grid.size() < 5) throw GridTooShort("need at least 5 grid points");
  if (window_pts < 3) window_pts = 3;
  if (window_pts % 2 == 0) ++window_pts;
  const int half = window_pts / 2;
  const int n = static_cast<int>(g.r_grid.size());
  if (n < window_pts) throw GridTooShort("grid shorter than the slope window");

  CurveEstimate curve{{}, {}, StatisticKind::K2};
  for (int i = half; i < n - half; ++i) {
    // local least-squares slope over the window
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int j = i - half; j <= i + half; ++j) {
      const double x = g.r_grid[static_cast<std::size_t>(j)];
      const double y = g.values[static_cast<std::size_t>(j)];
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double m = static_cast<double>(window_pts);
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    curve.r_grid.push_back(g.r_grid[static_cast<std::size_t>(i)]);
    curve.values.push_back(slope);
  }
  return curve;
}

std::optional<double> crossing_scale(const CurveEstimate& curve, double level) {
  if (curve.r_grid.size() < 2) return std::nullopt;
  for (std::size_t i = 1; i < curve.r_grid.size(); ++i) {
    const double a = curve.values[i - 1] - level;
    const double b = curve.values[i] - level;
    if ((a > 0 && b < 0) || (a < 0 && b > 0)) {
      const double t = a / (a - b);
      return curve.r_grid[i - 1] + t * (curve.r_grid[i] - curve.r_grid[i - 1]);
    }
    if (a != 0 && b == 0) return curve.r_grid[i];
  }
  return std::nullopt;
}

namespace {

CurveEstimate evaluate_statistic(const PointPattern& pattern, StatisticKind statistic,
                                 const std::vector<double>& r_grid, double bandwidth,
                                 int k2_window_pts) {
  switch (statistic) {
    case StatisticKind::K:
      return ripley_k(pattern, r_grid);
    case StatisticKind::L:
      return l_function(ripley_k(pattern, r_grid));
    case StatisticKind::G:
      return pair_correlation(pattern, r_grid, bandwidth);
    case StatisticKind::K2:
      return k2_index(pair_correlation(pattern, r_grid, bandwidth), k2_window_pts);
    default:
      throw Error("envelope not defined for this statistic");
  }
}

double theory_value(StatisticKind statistic, double r) {
  switch (statistic) {
    case StatisticKind::K:
      return M_PI * r * r;
    case StatisticKind::G:
      return 1.0;
    default:
      return 0.0;  // L and K2 are zero under CSR
  }
}

}  // namespace

EnvelopeBand csr_envelope(const PointPattern& pattern, StatisticKind statistic,
                          const std::vector<double>& r_grid, int n_sims, double level,
                          const RandomStream& rng, std::optional<double> bandwidth,
                          int k2_window_pts) {
  if (!(level > 0 && level < 1)) throw Error("level must be in (0,1)");
  if (n_sims < 2.0 / (1.0 - level) - 1.0)
    throw InsufficientSims("too few simulations for the requested level");
  const double b = bandwidth ? *bandwidth : default_bandwidth(pattern);

  std::vector<CurveEstimate> sims;
  sims.reserve(static_cast<std::size_t>(n_sims));
  for (int i = 0; i < n_sims; ++i) {
    RandomStream stream = rng.derived(static_cast<std::uint64_t>(i));
    const PointPattern sim =
        gen_uniform_n(pattern.window, static_cast<long>(pattern.size()), stream);
    sims.push_back(evaluate_statistic(sim, statistic, r_grid, b, k2_window_pts));
  }

  const std::vector<double>& grid = sims.front().r_grid;
  const std::size_t npts = grid.size();
  // pointwise rank envelope: k-th extremes at the requested level
  const int k = std::max(
      1, static_cast<int>(std::floor((1.0 - level) * (n_sims + 1) / 2.0)));

  EnvelopeBand band;
  band.r_grid = grid;
  band.n_sims = n_sims;
  band.level = level;
  band.lower.resize(npts);
  band.upper.resize(npts);
  band.theory.resize(npts);
  std::vector<double> column(static_cast<std::size_t>(n_sims));
  for (std::size_t j = 0; j < npts; ++j) {
    for (int i = 0; i < n_sims; ++i)
      column[static_cast<std::size_t>(i)] = sims[static_cast<std::size_t>(i)].values[j];
    std::sort(column.begin(), column.end());
    band.lower[j] = column[static_cast<std::size_t>(k - 1)];
    band.upper[j] = column[static_cast<std::size_t>(n_sims - k)];
    band.theory[j] = theory_value(statistic, grid[j]);
  }
  return band;
}

double relative_neighbourhood_density(const PointPattern& pattern, double radius) {
  if (pattern.size() < 2) throw EmptyPattern("need at least 2 points");
  if (!(radius > 0)) throw Error("radius must be positive");
  const CurveEstimate k = ripley_k(pattern, {radius});
  return k.values.front() / (M_PI * radius * radius);
}

}  // namespace pointpat
