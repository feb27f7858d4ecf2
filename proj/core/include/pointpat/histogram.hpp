#pragma once

#include <vector>

#include "pointpat/geometry.hpp"

namespace pointpat {

/// MAP histogram: per-bin counts plus posterior mean/variance of the
/// probability density (per unit area) over each bin.
struct OptimalHistogram {
  BinGrid grid;
  std::vector<int> counts;
  std::vector<double> heights_mean;
  std::vector<double> heights_var;
  double log_posterior = 0.0;
};

struct Histogram1D {
  int m = 1;
  double lo = 0.0, hi = 1.0;
  std::vector<int> counts;
  std::vector<double> heights;

  double bin_width() const { return (hi - lo) / m; }
};

}  // namespace pointpat
