#pragma once

#include <vector>

#include "pointpat/geometry.hpp"

namespace pointpat {

struct IntensityRaster {
  Window window;
  int nx = 0, ny = 0;
  std::vector<double> values;  // row-major, points per unit area

  double at(int ix, int iy) const {
    return values[static_cast<std::size_t>(iy * nx + ix)];
  }
  double cell_area() const {
    return (window.width() / nx) * (window.height() / ny);
  }
};

/// Epanechnikov kernel intensity estimate at raster cell centres:
///   lambda_hat(x) = (1/pi R^2) sum_i 2 (1 - |x - x_i|^2 / R^2), |x-x_i| <= R.
/// No edge correction is applied.
IntensityRaster epanechnikov_intensity(const PointPattern& pattern, double bandwidth,
                                       int nx = 256, int ny = 128);

/// R = 4.5 / sqrt(lambda_W), with lambda_W = n / window area.
double kernel_default_bandwidth(const PointPattern& pattern);

}  // namespace pointpat
