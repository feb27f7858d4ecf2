#include <doctest.h>

#include <cmath>
#include <set>

#include "pointpat/generators.hpp"

using namespace pointpat;

namespace {
const Window kWin(0, 500, 0, 500);
}

TEST_CASE("identical seeds give bitwise-identical patterns") {
  RandomStream a(5), b(5);
  const PointPattern p1 = gen_thomas(kWin, {2e-4, 10, 10}, ThomasMode::PoissonOffspring, a);
  const PointPattern p2 = gen_thomas(kWin, {2e-4, 10, 10}, ThomasMode::PoissonOffspring, b);
  REQUIRE(p1.size() == p2.size());
  for (std::size_t i = 0; i < p1.size(); ++i) {
    CHECK(p1.points[i].x == p2.points[i].x);
    CHECK(p1.points[i].y == p2.points[i].y);
  }
}

TEST_CASE("CSR counts match Poisson moments over seeds") {
  // E[N] = lambda * area = 500; 3-standard-error band on the seed mean
  const int seeds = 400;
  double total = 0;
  for (int i = 0; i < seeds; ++i) {
    RandomStream rng(1000 + static_cast<std::uint64_t>(i));
    total += static_cast<double>(gen_csr(kWin, 1.0 / 500.0, rng).size());
  }
  const double mean = total / seeds;
  const double se = std::sqrt(500.0 / seeds);
  CHECK(std::abs(mean - 500.0) < 3.0 * se);
}

TEST_CASE("constant thinning reduces to CSR quadrant counts") {
  const int seeds = 300;
  double q_sum[4] = {0, 0, 0, 0};
  for (int i = 0; i < seeds; ++i) {
    RandomStream rng(9000 + static_cast<std::uint64_t>(i));
    const PointPattern p =
        gen_inhomogeneous_poisson(kWin, [](Point) { return 1.0 / 500.0; }, 1.0 / 500.0, rng);
    for (const Point& pt : p.points) {
      const int q = (pt.x >= 250.0 ? 1 : 0) + (pt.y >= 250.0 ? 2 : 0);
      q_sum[q] += 1.0;
    }
  }
  // each quadrant expects 125 points per sample
  const double se = std::sqrt(125.0 / seeds);
  for (double q : q_sum) CHECK(std::abs(q / seeds - 125.0) < 3.0 * se);
}

TEST_CASE("thinning bound violations are detected") {
  RandomStream rng(3);
  CHECK_THROWS_AS(
      gen_inhomogeneous_poisson(kWin, [](Point) { return 2.0; }, 0.5, rng), ThinningBound);
}

TEST_CASE("Thomas with sigma=0 collapses onto parents") {
  RandomStream rng(17);
  const PointPattern p = gen_thomas(kWin, {2e-4, 0.0, 10.0}, ThomasMode::PoissonOffspring, rng);
  std::set<std::pair<double, double>> distinct;
  for (const Point& pt : p.points) distinct.insert({pt.x, pt.y});
  CHECK(distinct.size() <= 60);  // at most the parent count (~Poisson(50))
}

TEST_CASE("fixed-N mode returns exactly n points") {
  RandomStream rng(19);
  const PointPattern p = gen_thomas(kWin, {2e-4, 10.0, 10.0}, ThomasMode::FixedN, rng, 3000);
  CHECK(p.size() == 3000);
  for (const Point& pt : p.points) CHECK(p.window.contains(pt));
}

TEST_CASE("fixed-N mode without parents fails") {
  RandomStream rng(23);
  CHECK_THROWS_AS(
      gen_thomas(Window(0, 10, 0, 10), {1e-4, 1.0, 1.0}, ThomasMode::FixedN, rng, 10),
      NoParents);
}

TEST_CASE("Poisson-offspring totals have mean rho*A*mu") {
  const int seeds = 200;
  double total = 0;
  for (int i = 0; i < seeds; ++i) {
    RandomStream rng(40000 + static_cast<std::uint64_t>(i));
    total += static_cast<double>(
        gen_thomas(kWin, {2e-4, 10.0, 10.0}, ThomasMode::PoissonOffspring, rng).size());
  }
  const double mean = total / seeds;
  // var of the total is rho*A*(mu + mu^2) for a Poisson cluster total
  const double se = std::sqrt(50.0 * (10.0 + 100.0) / seeds);
  CHECK(std::abs(mean - 500.0) < 3.0 * se);
}

TEST_CASE("hardcore pattern satisfies the distance bound") {
  RandomStream rng(29);
  const PointPattern p = gen_hardcore(kWin, 500, 10.0, rng);
  CHECK(p.size() == 500);
  // brute-force pairwise scan
  double min_d = 1e300;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      min_d = std::min(min_d, distance(p.points[i], p.points[j]));
  CHECK(min_d >= 10.0);
}

TEST_CASE("infeasible packing fails") {
  RandomStream rng(31);
  CHECK_THROWS_AS(gen_hardcore(Window(0, 10, 0, 10), 50, 10.0, rng, 2000), PackingFailure);
}

TEST_CASE("disk cluster respects its support") {
  RandomStream rng(37);
  const Window win(0, 1000, 0, 500);
  ClusterShape shape{ClusterKind::DiskUniform, 50.0, {500, 250}, 0.0, 1.0};
  const PointPattern p = gen_shaped_cluster(win, shape, 1000, rng);
  for (const Point& pt : p.points)
    CHECK(distance(pt, {500, 250}) <= 50.0 + 1e-12);
}

TEST_CASE("square cluster overflowing the window is rejected") {
  RandomStream rng(41);
  ClusterShape shape{ClusterKind::SquareUniform, 30.0, {5, 5}, 0.0, 1.0};
  CHECK_THROWS_AS(gen_shaped_cluster(Window(0, 10, 0, 10), shape, 10, rng),
                  ShapeExceedsWindow);
}

TEST_CASE("gaussian cluster resamples out-of-window draws") {
  RandomStream rng(43);
  const Window win(0, 100, 0, 100);
  ClusterShape shape{ClusterKind::Gaussian, 40.0, {50, 50}, 0.0, 1.0};
  const PointPattern p = gen_shaped_cluster(win, shape, 500, rng);
  CHECK(p.size() == 500);
  for (const Point& pt : p.points) CHECK(win.contains(pt));
}

TEST_CASE("matern output stays in the window") {
  RandomStream rng(47);
  const PointPattern p = gen_matern(kWin, 2e-4, 50.0, 10.0, rng);
  for (const Point& pt : p.points) CHECK(kWin.contains(pt));
}

TEST_CASE("rotation by 0 and 360 degrees is the identity") {
  RandomStream rng(53);
  ClusterShape shape{ClusterKind::Gaussian, 20.0, {250, 250}, 0.0, 1.0};
  const PointPattern p = gen_shaped_cluster(kWin, shape, 200, rng);
  const PointPattern r0 = rotate_pattern(p, 0.0, {250, 250});
  const PointPattern r360 = rotate_pattern(p, 360.0, {250, 250});
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(r0.points[i].x == p.points[i].x);
    CHECK(r360.points[i].x == doctest::Approx(p.points[i].x).epsilon(1e-9));
    CHECK(r360.points[i].y == doctest::Approx(p.points[i].y).epsilon(1e-9));
  }
}

TEST_CASE("rotation leaving the window fails") {
  PointPattern p({{9.0, 5.0}, {1.0, 5.0}}, Window(0, 10, 0, 10));
  CHECK_THROWS_AS(rotate_pattern(p, 90.0, {9.0, 9.0}), OutOfWindow);
}
