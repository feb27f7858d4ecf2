#include "pointpat/fitting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace pointpat {

CurveEstimate theoretical_k_thomas(double rho, double sigma,
                                   const std::vector<double>& r_grid) {
  if (!(rho > 0) || !(sigma > 0)) throw Error("rho and sigma must be positive");
  CurveEstimate curve{r_grid, {}, StatisticKind::K};
  curve.values.reserve(r_grid.size());
  const double four_sigma2 = (2.0 * sigma) * (2.0 * sigma);
  for (double d : r_grid)
    curve.values.push_back(M_PI * d * d +
                           (1.0 - std::exp(-d * d / four_sigma2)) / rho);
  return curve;
}

namespace {

// quarter-power contrast, trapezoid rule on the empirical grid
double contrast(const CurveEstimate& k_hat, double rho, double sigma, double d_max) {
  const double four_sigma2 = (2.0 * sigma) * (2.0 * sigma);
  double acc = 0.0;
  double prev_sq = 0.0, prev_r = 0.0;
  bool have_prev = false;
  for (std::size_t i = 0; i < k_hat.r_grid.size(); ++i) {
    const double r = k_hat.r_grid[i];
    if (r > d_max) break;
    const double model =
        M_PI * r * r + (1.0 - std::exp(-r * r / four_sigma2)) / rho;
    const double diff = std::pow(std::max(k_hat.values[i], 0.0), 0.25) -
                        std::pow(model, 0.25);
    const double sq = diff * diff;
    if (have_prev) acc += 0.5 * (sq + prev_sq) * (r - prev_r);
    prev_sq = sq;
    prev_r = r;
    have_prev = true;
  }
  return acc;
}

struct LogParams {
  double log_rho;
  double log_sigma;
};

// Nelder-Mead in (log rho, log sigma)
LogParams nelder_mead(const CurveEstimate& k_hat, double d_max, LogParams start,
                      double step, int max_iter, double* best_value) {
  auto f = [&](const LogParams& p) {
    return contrast(k_hat, std::exp(p.log_rho), std::exp(p.log_sigma), d_max);
  };
  std::array<LogParams, 3> simplex{
      start, LogParams{start.log_rho + step, start.log_sigma},
      LogParams{start.log_rho, start.log_sigma + step}};
  std::array<double, 3> fv{f(simplex[0]), f(simplex[1]), f(simplex[2])};

  for (int iter = 0; iter < max_iter; ++iter) {
    // order best..worst
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    const int lo = order[0], mid = order[1], hi = order[2];
    if (std::abs(fv[hi] - fv[lo]) < 1e-14 * (1.0 + std::abs(fv[lo]))) break;

    const LogParams centroid{(simplex[lo].log_rho + simplex[mid].log_rho) / 2.0,
                             (simplex[lo].log_sigma + simplex[mid].log_sigma) / 2.0};
    auto along = [&](double t) {
      return LogParams{centroid.log_rho + t * (centroid.log_rho - simplex[hi].log_rho),
                       centroid.log_sigma + t * (centroid.log_sigma - simplex[hi].log_sigma)};
    };

    const LogParams refl = along(1.0);
    const double f_refl = f(refl);
    if (f_refl < fv[lo]) {
      const LogParams exp_p = along(2.0);
      const double f_exp = f(exp_p);
      if (f_exp < f_refl) {
        simplex[hi] = exp_p;
        fv[hi] = f_exp;
      } else {
        simplex[hi] = refl;
        fv[hi] = f_refl;
      }
    } else if (f_refl < fv[mid]) {
      simplex[hi] = refl;
      fv[hi] = f_refl;
    } else {
      const LogParams contr = along(-0.5);
      const double f_contr = f(contr);
      if (f_contr < fv[hi]) {
        simplex[hi] = contr;
        fv[hi] = f_contr;
      } else {
        // shrink toward the best vertex
        for (int i : {mid, hi}) {
          simplex[i].log_rho = (simplex[i].log_rho + simplex[lo].log_rho) / 2.0;
          simplex[i].log_sigma = (simplex[i].log_sigma + simplex[lo].log_sigma) / 2.0;
          fv[i] = f(simplex[i]);
        }
      }
    }
  }

  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (fv[i] < fv[best]) best = i;
  *best_value = fv[best];
  return simplex[best];
}

}  // namespace

ThomasFit fit_thomas_to_curve(const CurveEstimate& k_hat, double window_area, long n,
                              double d_max, double sigma_lo) {
  if (n < 10) throw Error("fit needs at least 10 points");
  const double rho_lo = 1.0 / window_area;
  const double rho_hi = static_cast<double>(n) / window_area;
  const double sigma_hi = d_max / 2.0;
  if (!(sigma_lo > 0) || !(sigma_lo < sigma_hi)) throw Error("bad sigma range");

  // coarse 40x40 log-grid scan to seed the refinement
  constexpr int kGridN = 40;
  double best_val = std::numeric_limits<double>::infinity();
  LogParams best{std::log(rho_lo), std::log(sigma_lo)};
  for (int i = 0; i < kGridN; ++i) {
    const double lr = std::log(rho_lo) +
                      (std::log(rho_hi) - std::log(rho_lo)) * i / (kGridN - 1.0);
    for (int j = 0; j < kGridN; ++j) {
      const double ls = std::log(sigma_lo) +
                        (std::log(sigma_hi) - std::log(sigma_lo)) * j / (kGridN - 1.0);
      const double v = contrast(k_hat, std::exp(lr), std::exp(ls), d_max);
      if (v < best_val) {
        best_val = v;
        best = {lr, ls};
      }
    }
  }

  double refined_val = best_val;
  const LogParams refined = nelder_mead(k_hat, d_max, best, 0.1, 400, &refined_val);

  const double rho_hat = std::exp(refined.log_rho);
  const double sigma_hat = std::exp(refined.log_sigma);
  // reject solutions that escaped the admissible box by a wide margin
  if (rho_hat < rho_lo / 10.0 || rho_hat > rho_hi * 10.0 || sigma_hat < sigma_lo / 10.0 ||
      sigma_hat > sigma_hi * 10.0)
    throw FitDiverged("refinement left the admissible parameter box");

  ThomasFit fit;
  fit.rho_hat = rho_hat;
  fit.sigma_hat = sigma_hat;
  fit.contrast = refined_val;
  fit.d_max = d_max;
  const long parents = static_cast<long>(std::floor(rho_hat * window_area + 0.5));
  fit.mu_hat = parents > 0 ? static_cast<double>(n) / static_cast<double>(parents)
                           : static_cast<double>(n);
  return fit;
}

ThomasFit fit_thomas(const PointPattern& pattern, double d_max, double grid_step) {
  if (pattern.size() < 10) throw Error("fit needs at least 10 points");
  if (!(grid_step > 0)) throw Error("grid_step must be positive");
  const double bound =
      std::min(pattern.window.width(), pattern.window.height()) / 2.0;
  const double d_eff = std::min(d_max, bound);

  std::vector<double> r_grid;
  for (double r = grid_step; r <= d_eff + 1e-12; r += grid_step) r_grid.push_back(r);
  const CurveEstimate k_hat = ripley_k(pattern, r_grid);
  return fit_thomas_to_curve(k_hat, pattern.window.area(),
                             static_cast<long>(pattern.size()), d_eff, grid_step);
}

FilterDecision species_filter(const ThomasFit& fit, long n, double a0,
                              double max_diameter) {
  const double diameter = fit.sigma_hat * std::sqrt(2.0 * M_PI);
  if (!(diameter < max_diameter))
    return {false, "cluster-diameter"};
  const long parents = static_cast<long>(std::floor(fit.rho_hat * a0 + 0.5));
  if (!(parents < n)) return {false, "cluster-count"};
  return {true, ""};
}

double anisotropy_index(const OptimalHistogram& hist) {
  const double ax = hist.grid.bin_width_x();
  const double ay = hist.grid.bin_width_y();
  return std::abs(ay - ax) / std::max(ax, ay);
}

double difference_index(double a_mtp, double a_real) {
  if (!(a_mtp > 0) || !(a_real > 0)) throw Error("bin areas must be positive");
  return a_mtp - a_real;
}

RegressionResult linear_regression(const std::vector<double>& xs,
                                   const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3) throw Error("need >= 3 paired values");
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom <= 1e-14 * std::max(1.0, n * sxx)) throw DegenerateX("xs are all equal");
  RegressionResult r;
  r.slope = (n * sxy - sx * sy) / denom;
  r.intercept = (sy - r.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double pred = r.slope * xs[i] + r.intercept;
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  r.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return r;
}

}  // namespace pointpat
