#pragma once

#include <optional>
#include <vector>

#include "pointpat/geometry.hpp"
#include "pointpat/random.hpp"

namespace pointpat {

enum class StatisticKind { K, L, G, K2, Omega };

struct CurveEstimate {
  std::vector<double> r_grid;
  std::vector<double> values;
  StatisticKind statistic_kind = StatisticKind::K;
};

struct EnvelopeBand {
  std::vector<double> r_grid;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> theory;
  int n_sims = 0;
  double level = 0.99;
};

/// Ripley isotropic edge correction: fraction of the circle centred at
/// `center` with radius r that lies inside the rectangular window.
double arc_fraction(const Window& window, const Point& center, double r);

/// Default evaluation grid: n points from `lo` (the default smoothing
/// bandwidth when omitted) to half the shorter window side.
std::vector<double> default_r_grid(const PointPattern& pattern, int n = 512,
                                   std::optional<double> lo = std::nullopt);

/// Default pair-correlation smoothing bandwidth, 0.15 / sqrt(lambda_hat).
double default_bandwidth(const PointPattern& pattern);

/// Edge-corrected Ripley K on r_grid.  Valid for
/// max(r_grid) <= min(window sides)/2.
CurveEstimate ripley_k(const PointPattern& pattern, const std::vector<double>& r_grid);

/// L(r) = sqrt(K(r)/pi) - r.
CurveEstimate l_function(const CurveEstimate& k);

/// Kernel (Epanechnikov) estimate of the pair correlation function g.
CurveEstimate pair_correlation(const PointPattern& pattern,
                               const std::vector<double>& r_grid,
                               double smoothing_bandwidth);

/// K2 index: dg/dr by windowed least-squares slopes over `window_pts`
/// grid points (odd, >= 3); returned on the interior of g's grid.
CurveEstimate k2_index(const CurveEstimate& g, int window_pts = 5);

/// First r where the curve crosses `level` transversally (linear
/// interpolation); nullopt when there is no crossing.
std::optional<double> crossing_scale(const CurveEstimate& curve, double level);

/// Pointwise Monte Carlo rank envelope under CSR with the pattern's n and
/// window.  Simulation i uses rng.derived(i).
EnvelopeBand csr_envelope(const PointPattern& pattern, StatisticKind statistic,
                          const std::vector<double>& r_grid, int n_sims, double level,
                          const RandomStream& rng,
                          std::optional<double> bandwidth = std::nullopt,
                          int k2_window_pts = 5);

/// Omega_{0-x} = K_hat(radius) / (pi radius^2).
double relative_neighbourhood_density(const PointPattern& pattern, double radius);

}  // namespace pointpat
