#include "pointpat/generators.hpp"

#include <cmath>

namespace pointpat {

namespace {

Point uniform_point(const Window& w, RandomStream& rng) {
  // x before y, fixed draw order for reproducibility
  const double x = rng.uniform(w.x_min, w.x_max);
  const double y = rng.uniform(w.y_min, w.y_max);
  return {x, y};
}

double wrap(double v, double lo, double hi) {
  const double range = hi - lo;
  double t = std::fmod(v - lo, range);
  if (t < 0) t += range;
  return lo + t;
}

Point wrap_toroidal(const Point& p, const Window& w) {
  return {wrap(p.x, w.x_min, w.x_max), wrap(p.y, w.y_min, w.y_max)};
}

}  // namespace

PointPattern gen_csr(const Window& window, double lambda, RandomStream& rng) {
  if (!(lambda > 0)) throw Error("lambda must be positive");
  const long n = rng.poisson(lambda * window.area());
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) points.push_back(uniform_point(window, rng));
  return PointPattern(std::move(points), window);
}

PointPattern gen_uniform_n(const Window& window, long n, RandomStream& rng) {
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) points.push_back(uniform_point(window, rng));
  return PointPattern(std::move(points), window);
}

PointPattern gen_inhomogeneous_poisson(const Window& window,
                                       const std::function<double(Point)>& lambda_fn,
                                       double lambda_max, RandomStream& rng) {
  if (!(lambda_max > 0)) throw Error("lambda_max must be positive");
  const long n = rng.poisson(lambda_max * window.area());
  std::vector<Point> points;
  for (long i = 0; i < n; ++i) {
    const Point p = uniform_point(window, rng);
    const double lam = lambda_fn(p);
    if (lam > lambda_max)
      throw ThinningBound("lambda_fn exceeds lambda_max at a sampled point");
    if (rng.uniform() < lam / lambda_max) points.push_back(p);
  }
  return PointPattern(std::move(points), window);
}

PointPattern gen_thomas(const Window& window, const ThomasParams& params,
                        ThomasMode mode, RandomStream& rng, long fixed_n) {
  if (!(params.rho > 0) || params.sigma < 0 || !(params.mu > 0))
    throw Error("invalid Thomas parameters");
  const double a0 = window.area();
  std::vector<Point> parents;
  std::vector<Point> points;

  if (mode == ThomasMode::PoissonOffspring) {
    const long n_parents = rng.poisson(params.rho * a0);
    parents.reserve(static_cast<std::size_t>(n_parents));
    for (long i = 0; i < n_parents; ++i) parents.push_back(uniform_point(window, rng));
    for (const Point& parent : parents) {
      const long k = rng.poisson(params.mu);
      for (long j = 0; j < k; ++j) {
        const Point off{parent.x + params.sigma * rng.normal(),
                        parent.y + params.sigma * rng.normal()};
        points.push_back(wrap_toroidal(off, window));
      }
    }
  } else {
    if (fixed_n < 1) throw Error("fixed-N mode needs n >= 1");
    const long n_parents = static_cast<long>(std::floor(params.rho * a0 + 0.5));
    if (n_parents == 0) throw NoParents("floor(rho*A + 1/2) = 0");
    parents.reserve(static_cast<std::size_t>(n_parents));
    for (long i = 0; i < n_parents; ++i) parents.push_back(uniform_point(window, rng));
    points.reserve(static_cast<std::size_t>(fixed_n));
    for (long i = 0; i < fixed_n; ++i) {
      const Point& parent =
          parents[static_cast<std::size_t>(rng.uniform_index(static_cast<std::uint64_t>(n_parents)))];
      const Point off{parent.x + params.sigma * rng.normal(),
                      parent.y + params.sigma * rng.normal()};
      points.push_back(wrap_toroidal(off, window));
    }
  }
  return PointPattern(std::move(points), window);
}

PointPattern gen_matern(const Window& window, double rho, double disk_radius,
                        double mu, RandomStream& rng) {
  if (!(rho > 0) || !(disk_radius > 0) || !(mu > 0))
    throw Error("invalid Matern parameters");
  const long n_parents = rng.poisson(rho * window.area());
  std::vector<Point> points;
  for (long i = 0; i < n_parents; ++i) {
    const Point parent = uniform_point(window, rng);
    const long k = rng.poisson(mu);
    for (long j = 0; j < k; ++j) {
      // uniform on the disk: sqrt-radius times random angle
      const double r = disk_radius * std::sqrt(rng.uniform());
      const double a = 2.0 * M_PI * rng.uniform();
      const Point off{parent.x + r * std::cos(a), parent.y + r * std::sin(a)};
      points.push_back(wrap_toroidal(off, window));
    }
  }
  return PointPattern(std::move(points), window);
}

PointPattern gen_hardcore(const Window& window, long n_target, double hardcore_radius,
                          RandomStream& rng, long max_attempts) {
  if (n_target < 1) throw Error("n_target must be >= 1");
  if (hardcore_radius < 0) throw Error("hardcore_radius must be >= 0");
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n_target));
  long rejections = 0;
  while (static_cast<long>(points.size()) < n_target) {
    const Point p = uniform_point(window, rng);
    bool ok = true;
    for (const Point& q : points) {
      if (distance(p, q) < hardcore_radius) {
        ok = false;
        break;
      }
    }
    if (ok) {
      points.push_back(p);
      rejections = 0;
    } else if (++rejections >= max_attempts) {
      throw PackingFailure("too many consecutive rejections");
    }
  }
  return PointPattern(std::move(points), window);
}

PointPattern gen_shaped_cluster(const Window& window, const ClusterShape& shape, long n,
                                RandomStream& rng) {
  if (!(shape.size > 0)) throw Error("shape size must be positive");
  const double theta = shape.rotation_deg * M_PI / 180.0;
  const double c = std::cos(theta), s = std::sin(theta);
  auto place = [&](double dx, double dy) -> Point {
    return {shape.center.x + c * dx - s * dy, shape.center.y + s * dx + c * dy};
  };

  // deterministic-support shapes must fit in the window
  if (shape.kind != ClusterKind::Gaussian) {
    // rotated square: farthest support point is at the half-diagonal
    const double reach = shape.kind == ClusterKind::SquareUniform
                             ? shape.size / 2.0 * M_SQRT2
                             : shape.size;
    if (shape.center.x - reach < window.x_min || shape.center.x + reach > window.x_max ||
        shape.center.y - reach < window.y_min || shape.center.y + reach > window.y_max)
      throw ShapeExceedsWindow("cluster support overflows the window");
  }

  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    Point p{0, 0};
    switch (shape.kind) {
      case ClusterKind::SquareUniform: {
        const double dx = rng.uniform(-shape.size / 2.0, shape.size / 2.0);
        const double dy = rng.uniform(-shape.size / 2.0, shape.size / 2.0);
        p = place(dx, dy);
        break;
      }
      case ClusterKind::DiskUniform: {
        const double r = shape.size * std::sqrt(rng.uniform());
        const double a = 2.0 * M_PI * rng.uniform();
        p = place(r * std::cos(a), r * std::sin(a));
        break;
      }
      case ClusterKind::Gaussian: {
        // out-of-window draws are resampled, not clipped
        do {
          const double dx = shape.axis_ratio * shape.size * rng.normal();
          const double dy = shape.size * rng.normal();
          p = place(dx, dy);
        } while (!window.contains(p));
        break;
      }
    }
    points.push_back(p);
  }
  return PointPattern(std::move(points), window);
}

PointPattern rotate_pattern(const PointPattern& pattern, double angle_deg,
                            const Point& pivot) {
  const double theta = angle_deg * M_PI / 180.0;
  const double c = std::cos(theta), s = std::sin(theta);
  std::vector<Point> points;
  points.reserve(pattern.size());
  for (const Point& p : pattern.points) {
    const double dx = p.x - pivot.x, dy = p.y - pivot.y;
    const Point q{pivot.x + c * dx - s * dy, pivot.y + s * dx + c * dy};
    if (!pattern.window.contains(q))
      throw OutOfWindow("rotated point leaves the window");
    points.push_back(q);
  }
  return PointPattern(std::move(points), pattern.window);
}

}  // namespace pointpat
