#pragma once

#include <string>
#include <vector>

#include "pointpat/histogram.hpp"
#include "pointpat/secondstats.hpp"

namespace pointpat {

struct ThomasFit {
  double rho_hat = 0.0;
  double sigma_hat = 0.0;
  double mu_hat = 0.0;  // implied: n / floor(rho_hat*A0 + 1/2)
  double contrast = 0.0;
  double d_max = 0.0;
};

struct FilterDecision {
  bool accept = false;
  std::string reason;  // empty when accepted
};

struct RegressionResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// K of the modified Thomas process:
///   K(d) = pi d^2 + (1/rho) (1 - exp(-d^2 / (2 sigma)^2)).
CurveEstimate theoretical_k_thomas(double rho, double sigma,
                                   const std::vector<double>& r_grid);

/// Minimum-contrast fit of (rho, sigma) to an empirical K curve, with the
/// quarter-power objective
///   integral_0^{d_max} (Khat^{1/4} - K_mTp^{1/4})^2 dh
/// (trapezoid quadrature on the curve's grid).  Coarse 40x40 log-grid
/// scan over rho in [1/A0, n/A0] and sigma in [sigma_lo, d_max/2],
/// followed by Nelder-Mead refinement in log parameters.
ThomasFit fit_thomas_to_curve(const CurveEstimate& k_hat, double window_area, long n,
                              double d_max, double sigma_lo);

/// Fit from a pattern: computes the edge-corrected K on a grid of the
/// given step from grid_step to d_max, then runs fit_thomas_to_curve.
/// d_max is clamped to the edge-correction validity bound.
ThomasFit fit_thomas(const PointPattern& pattern, double d_max = 300.0,
                     double grid_step = 1.0);

/// Keep a species only when the fitted cluster diameter sigma*sqrt(2 pi)
/// is below max_diameter and the implied parent count is below n.
FilterDecision species_filter(const ThomasFit& fit, long n, double a0,
                              double max_diameter = 500.0);

/// I_an = |a_y - a_x| / max(a_x, a_y) over the MAP grid's bin widths.
double anisotropy_index(const OptimalHistogram& hist);

/// Delta = a(mTp) - a(real).
double difference_index(double a_mtp, double a_real);

RegressionResult linear_regression(const std::vector<double>& xs,
                                   const std::vector<double>& ys);

}  // namespace pointpat
