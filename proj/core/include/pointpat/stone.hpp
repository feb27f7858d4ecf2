#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "pointpat/histogram.hpp"

namespace pointpat {

struct StoneScore {
  int m = 1;
  double k_value = 0.0;
};

struct StoneResult {
  int m_hat = 1;
  std::vector<StoneScore> scores;
};

/// Stone's cross-validation rule with the origin fixed at the sample
/// minimum and bin width range/m:  K(m) = (1/v) * (2/N - sum_k pi_k^2).
/// Returns the minimizing m in [1, c], ties toward smaller m.
StoneResult stone_optimal_bins(const std::vector<double>& samples, int c = 50);

/// Counts-only histogram on [min, max] with m equal bins, normalized
/// heights; shared by the Knuth/Stone comparison.
Histogram1D fixed_bin_histogram(const std::vector<double>& samples, int m);

/// L^p (p = 1 or 2) distance between the histogram density and true_pdf
/// over the histogram span, by midpoint quadrature at the given step.
double histogram_density_distance(const Histogram1D& hist,
                                  const std::function<double(double)>& true_pdf,
                                  int p, double quadrature_step);

}  // namespace pointpat
