#include "pointpat/kernel_intensity.hpp"

#include <cmath>

namespace pointpat {

IntensityRaster epanechnikov_intensity(const PointPattern& pattern, double bandwidth,
                                       int nx, int ny) {
  if (!(bandwidth > 0)) throw Error("bandwidth must be positive");
  if (nx < 2 || ny < 2) throw Error("raster resolution must be >= 2 per axis");
  const Window& w = pattern.window;
  IntensityRaster raster{w, nx, ny, std::vector<double>(static_cast<std::size_t>(nx) * ny, 0.0)};

  const double dx = w.width() / nx;
  const double dy = w.height() / ny;
  const double r2 = bandwidth * bandwidth;
  const double norm = 1.0 / (M_PI * r2);

  for (const Point& p : pattern.points) {
    // only cells whose centre can be within the bandwidth
    const int ix_lo = std::max(0, static_cast<int>((p.x - bandwidth - w.x_min) / dx));
    const int ix_hi = std::min(nx - 1, static_cast<int>((p.x + bandwidth - w.x_min) / dx));
    const int iy_lo = std::max(0, static_cast<int>((p.y - bandwidth - w.y_min) / dy));
    const int iy_hi = std::min(ny - 1, static_cast<int>((p.y + bandwidth - w.y_min) / dy));
    for (int iy = iy_lo; iy <= iy_hi; ++iy) {
      const double cy = w.y_min + (iy + 0.5) * dy;
      for (int ix = ix_lo; ix <= ix_hi; ++ix) {
        const double cx = w.x_min + (ix + 0.5) * dx;
        const double d2 = (cx - p.x) * (cx - p.x) + (cy - p.y) * (cy - p.y);
        if (d2 <= r2)
          raster.values[static_cast<std::size_t>(iy * nx + ix)] +=
              norm * 2.0 * (1.0 - d2 / r2);
      }
    }
  }
  return raster;
}

double kernel_default_bandwidth(const PointPattern& pattern) {
  if (pattern.size() < 1) throw EmptyPattern("empty pattern");
  const double lambda_w = static_cast<double>(pattern.size()) / pattern.window.area();
  return 4.5 / std::sqrt(lambda_w);
}

}  // namespace pointpat
