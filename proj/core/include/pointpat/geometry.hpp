#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "pointpat/errors.hpp"

namespace pointpat {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Axis-aligned rectangular window [x_min, x_max] x [y_min, y_max].
struct Window {
  double x_min, x_max, y_min, y_max;

  Window(double x_lo, double x_hi, double y_lo, double y_hi)
      : x_min(x_lo), x_max(x_hi), y_min(y_lo), y_max(y_hi) {
    if (!(x_min < x_max) || !(y_min < y_max))
      throw DegenerateSpan("window bounds must satisfy x_min < x_max and y_min < y_max");
  }

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }

  bool contains(const Point& p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
};

/// An ordered set of points together with the observation window.
struct PointPattern {
  std::vector<Point> points;
  Window window;

  PointPattern(std::vector<Point> pts, Window win)
      : points(std::move(pts)), window(win) {
    for (const Point& p : points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw Error("non-finite point coordinate");
      if (!window.contains(p)) throw OutOfWindow("point outside observation window");
    }
  }

  std::size_t size() const { return points.size(); }
};

/// Rectangular m_x x m_y partition of a span.  The span is the data
/// bounding box by default, not the observation window.
struct BinGrid {
  int m_x, m_y;
  Window span;

  BinGrid(int mx, int my, Window s) : m_x(mx), m_y(my), span(s) {
    if (m_x < 1 || m_y < 1) throw Error("bin counts must be >= 1");
  }

  int bin_count() const { return m_x * m_y; }
  double bin_width_x() const { return span.width() / m_x; }
  double bin_width_y() const { return span.height() / m_y; }
  double bin_area() const { return bin_width_x() * bin_width_y(); }
};

/// Tight bounding box of the points; the default span V for binning.
Window data_span(const PointPattern& pattern);

/// Bin index of p in row-major order (k = iy*m_x + ix).  Cells are
/// half-open [lo, hi), closed at the span's top boundary; interior edges
/// belong to the higher-index bin.
int bin_index(const BinGrid& grid, const Point& p);

/// Per-bin point counts; throws OutOfSpan on any stray point.
std::vector<int> bin_counts(const BinGrid& grid, const std::vector<Point>& points);

}  // namespace pointpat
