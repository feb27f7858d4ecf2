#include "pointpat/geometry.hpp"

#include <algorithm>
#include <limits>

namespace pointpat {

Window data_span(const PointPattern& pattern) {
  if (pattern.size() < 2) throw EmptyPattern("data_span needs at least 2 points");
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo, y_lo = x_lo, y_hi = -x_lo;
  for (const Point& p : pattern.points) {
    x_lo = std::min(x_lo, p.x);
    x_hi = std::max(x_hi, p.x);
    y_lo = std::min(y_lo, p.y);
    y_hi = std::max(y_hi, p.y);
  }
  if (!(x_lo < x_hi) || !(y_lo < y_hi))
    throw DegenerateSpan("all points share an x or y coordinate");
  return Window(x_lo, x_hi, y_lo, y_hi);
}

namespace {

inline int axis_index(double v, double lo, double hi, int m) {
  if (v < lo || v > hi) return -1;
  int i = static_cast<int>(std::floor((v - lo) / (hi - lo) * m));
  // top boundary belongs to the last bin
  if (i >= m) i = m - 1;
  if (i < 0) i = 0;
  return i;
}

}  // namespace

int bin_index(const BinGrid& grid, const Point& p) {
  const int ix = axis_index(p.x, grid.span.x_min, grid.span.x_max, grid.m_x);
  const int iy = axis_index(p.y, grid.span.y_min, grid.span.y_max, grid.m_y);
  if (ix < 0 || iy < 0) throw OutOfSpan("point outside bin grid span");
  return iy * grid.m_x + ix;
}

std::vector<int> bin_counts(const BinGrid& grid, const std::vector<Point>& points) {
  std::vector<int> counts(static_cast<std::size_t>(grid.bin_count()), 0);
  for (const Point& p : points) ++counts[static_cast<std::size_t>(bin_index(grid, p))];
  return counts;
}

}  // namespace pointpat
