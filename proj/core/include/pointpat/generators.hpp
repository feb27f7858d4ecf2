#pragma once

#include <functional>

#include "pointpat/geometry.hpp"
#include "pointpat/random.hpp"

namespace pointpat {

struct ThomasParams {
  double rho;    // parent intensity (parents per unit area)
  double sigma;  // offspring displacement s.d.
  double mu;     // mean offspring per parent
};

enum class ThomasMode { PoissonOffspring, FixedN };

enum class ClusterKind { SquareUniform, DiskUniform, Gaussian };

struct ClusterShape {
  ClusterKind kind = ClusterKind::Gaussian;
  double size = 1.0;  // side, radius, or sigma_y depending on kind
  Point center{0.0, 0.0};
  double rotation_deg = 0.0;
  double axis_ratio = 1.0;  // gaussian only: sigma_x = axis_ratio * size
};

/// Homogeneous Poisson (CSR): N ~ Poisson(lambda * area), points uniform.
PointPattern gen_csr(const Window& window, double lambda, RandomStream& rng);

/// CSR conditioned on the point count (used for envelope simulations).
PointPattern gen_uniform_n(const Window& window, long n, RandomStream& rng);

/// Inhomogeneous Poisson by thinning a CSR sample at lambda_max.
PointPattern gen_inhomogeneous_poisson(const Window& window,
                                       const std::function<double(Point)>& lambda_fn,
                                       double lambda_max, RandomStream& rng);

/// Modified Thomas process.  PoissonOffspring: Poisson(rho*A) parents,
/// Poisson(mu) offspring each.  FixedN: floor(rho*A + 1/2) parents and
/// exactly fixed_n offspring assigned to uniformly random parents.
/// Offspring are Gaussian-displaced from their parent and wrapped
/// toroidally; parents are removed.
PointPattern gen_thomas(const Window& window, const ThomasParams& params,
                        ThomasMode mode, RandomStream& rng, long fixed_n = 0);

/// Matern cluster process: offspring uniform on a disk around each parent.
PointPattern gen_matern(const Window& window, double rho, double disk_radius,
                        double mu, RandomStream& rng);

/// Simple sequential inhibition: uniform proposals, rejected within
/// hardcore_radius of an accepted point.
PointPattern gen_hardcore(const Window& window, long n_target, double hardcore_radius,
                          RandomStream& rng, long max_attempts = 1000000);

/// n points from a single shaped cluster (uniform square / uniform disk /
/// bivariate Gaussian, optionally rotated).  Gaussian draws falling
/// outside the window are resampled.
PointPattern gen_shaped_cluster(const Window& window, const ClusterShape& shape, long n,
                                RandomStream& rng);

/// Rigid rotation of all points about a pivot; the window is unchanged and
/// rotated points must stay inside it.
PointPattern rotate_pattern(const PointPattern& pattern, double angle_deg,
                            const Point& pivot);

}  // namespace pointpat
