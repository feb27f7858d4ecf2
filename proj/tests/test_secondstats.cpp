#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pointpat/generators.hpp"
#include "pointpat/secondstats.hpp"

using namespace pointpat;

namespace {

// Independent arc-fraction oracle: find every angle where the circle
// crosses a window side, then classify the arcs between consecutive
// critical angles by their midpoints.
double arc_fraction_oracle(const Window& w, const Point& c, double r) {
  std::vector<double> angles{0.0, 2.0 * M_PI};
  auto add = [&](double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a < 0) a += 2.0 * M_PI;
    angles.push_back(a);
  };
  for (double xs : {w.x_min, w.x_max}) {
    const double t = (xs - c.x) / r;
    if (t >= -1.0 && t <= 1.0) {
      add(std::acos(t));
      add(-std::acos(t));
    }
  }
  for (double ys : {w.y_min, w.y_max}) {
    const double t = (ys - c.y) / r;
    if (t >= -1.0 && t <= 1.0) {
      add(std::asin(t));
      add(M_PI - std::asin(t));
    }
  }
  std::sort(angles.begin(), angles.end());
  double inside = 0.0;
  for (std::size_t i = 1; i < angles.size(); ++i) {
    const double mid = (angles[i - 1] + angles[i]) / 2.0;
    const Point p{c.x + r * std::cos(mid), c.y + r * std::sin(mid)};
    if (w.contains(p)) inside += angles[i] - angles[i - 1];
  }
  return inside / (2.0 * M_PI);
}

double ripley_oracle(const PointPattern& pat, double r) {
  const double n = static_cast<double>(pat.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < pat.size(); ++i)
    for (std::size_t j = 0; j < pat.size(); ++j) {
      if (i == j) continue;
      const double d = distance(pat.points[i], pat.points[j]);
      if (d <= r) acc += 1.0 / arc_fraction_oracle(pat.window, pat.points[i], d);
    }
  return acc * pat.window.area() / (n * n);
}

}  // namespace

TEST_CASE("arc fraction agrees with the angle-interval oracle") {
  RandomStream rng(101);
  const Window w(0, 100, 0, 60);
  for (int trial = 0; trial < 500; ++trial) {
    const Point c{rng.uniform(0.0, 100.0), rng.uniform(0.0, 60.0)};
    const double r = rng.uniform(0.1, 30.0);
    CHECK(arc_fraction(w, c, r) ==
          doctest::Approx(arc_fraction_oracle(w, c, r)).epsilon(1e-10));
  }
}

TEST_CASE("two-point K by hand") {
  // points far from the boundary, so w = 1 exactly
  const Window w(0, 1000, 0, 1000);
  PointPattern pat({{500, 500}, {510, 500}}, w);
  const CurveEstimate k = ripley_k(pat, {5.0, 10.0, 20.0});
  CHECK(k.values[0] == doctest::Approx(0.0));
  CHECK(k.values[1] == doctest::Approx(w.area() / 2.0).epsilon(1e-12));
  CHECK(k.values[2] == doctest::Approx(w.area() / 2.0).epsilon(1e-12));
}

TEST_CASE("edge-corrected K matches the brute-force oracle") {
  RandomStream rng(103);
  const Window w(0, 100, 0, 100);
  for (int trial = 0; trial < 5; ++trial) {
    const long n = 10 + static_cast<long>(rng.uniform_index(40));
    RandomStream sub = rng.derived(trial + 1);
    const PointPattern pat = gen_uniform_n(w, n, sub);
    for (double r : {5.0, 15.0, 30.0, 49.0}) {
      const CurveEstimate k = ripley_k(pat, {r});
      CHECK(k.values[0] == doctest::Approx(ripley_oracle(pat, r)).epsilon(1e-9));
    }
  }
}

TEST_CASE("K is non-decreasing") {
  RandomStream rng(107);
  const PointPattern pat = gen_uniform_n(Window(0, 200, 0, 200), 300, rng);
  const std::vector<double> grid = default_r_grid(pat, 128);
  const CurveEstimate k = ripley_k(pat, grid);
  for (std::size_t i = 1; i < k.values.size(); ++i)
    CHECK(k.values[i] >= k.values[i - 1]);
}

TEST_CASE("range validity is enforced") {
  PointPattern pat({{1, 1}, {5, 5}}, Window(0, 10, 0, 10));
  CHECK_THROWS_AS(ripley_k(pat, {6.0}), RangeTooLarge);
}

TEST_CASE("L transform basics") {
  CurveEstimate k{{1.0, 2.0, 3.0}, {}, StatisticKind::K};
  for (double r : k.r_grid) k.values.push_back(M_PI * r * r);
  const CurveEstimate l = l_function(k);
  for (double v : l.values) CHECK(v == doctest::Approx(0.0));

  CurveEstimate k2{{1.0, 2.0}, {}, StatisticKind::K};
  for (double r : k2.r_grid) k2.values.push_back(2.0 * M_PI * r * r);
  const CurveEstimate l2 = l_function(k2);
  for (std::size_t i = 0; i < l2.values.size(); ++i)
    CHECK(l2.values[i] ==
          doctest::Approx(l2.r_grid[i] * (std::sqrt(2.0) - 1.0)).epsilon(1e-12));

  CurveEstimate bad{{1.0}, {-1.0}, StatisticKind::K};
  CHECK_THROWS_AS(l_function(bad), NegativeK);
}

TEST_CASE("pair correlation of CSR hovers around 1") {
  // average g over seeds at a few interior distances
  const Window w(0, 500, 0, 500);
  const std::vector<double> grid{20.0, 50.0, 100.0};
  const int seeds = 40;
  std::vector<double> mean(grid.size(), 0.0);
  for (int i = 0; i < seeds; ++i) {
    RandomStream rng(5000 + static_cast<std::uint64_t>(i));
    const PointPattern pat = gen_uniform_n(w, 500, rng);
    const CurveEstimate g = pair_correlation(pat, grid, 10.0);
    for (std::size_t j = 0; j < grid.size(); ++j) mean[j] += g.values[j];
  }
  for (double& m : mean) m /= seeds;
  for (double m : mean) CHECK(m == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("g is nonnegative and clustered mTp exceeds 1 at small r") {
  RandomStream rng(113);
  const PointPattern pat =
      gen_thomas(Window(0, 500, 0, 500), {2e-4, 10, 10}, ThomasMode::PoissonOffspring, rng);
  const std::vector<double> grid = default_r_grid(pat, 256);
  const CurveEstimate g = pair_correlation(pat, grid, default_bandwidth(pat));
  for (double v : g.values) CHECK(v >= 0.0);
  CHECK(g.values[0] > 1.5);
}

TEST_CASE("K2 of a constant curve is zero") {
  CurveEstimate g{{}, {}, StatisticKind::G};
  for (int i = 0; i < 50; ++i) {
    g.r_grid.push_back(1.0 + 0.1 * i);
    g.values.push_back(1.0);
  }
  const CurveEstimate k2 = k2_index(g);
  for (double v : k2.values) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("K2 matches an analytic derivative") {
  CurveEstimate g{{}, {}, StatisticKind::G};
  for (int i = 0; i <= 100; ++i) {
    const double r = 0.1 * i;
    g.r_grid.push_back(r);
    g.values.push_back(1.0 + std::exp(-r));
  }
  const CurveEstimate k2 = k2_index(g, 5);
  for (std::size_t i = 0; i < k2.r_grid.size(); ++i)
    CHECK(std::abs(k2.values[i] - (-std::exp(-k2.r_grid[i]))) <= 1e-2);
}

TEST_CASE("K2 needs enough grid points") {
  CurveEstimate g{{1, 2, 3}, {1, 1, 1}, StatisticKind::G};
  CHECK_THROWS_AS(k2_index(g), GridTooShort);
}

TEST_CASE("crossing_scale interpolation") {
  CurveEstimate flat{{1.0, 2.0, 3.0}, {1.0, 1.0, 1.0}, StatisticKind::G};
  CHECK(!crossing_scale(flat, 1.0).has_value());

  CurveEstimate seg{{1.0, 2.0}, {2.0, 0.5}, StatisticKind::G};
  const auto c = crossing_scale(seg, 1.0);
  REQUIRE(c.has_value());
  CHECK(*c == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("envelope at level 0.99 with 199 sims is the min/max band") {
  RandomStream rng(127);
  const PointPattern pat = gen_uniform_n(Window(0, 200, 0, 200), 100, rng);
  const std::vector<double> grid{10.0, 30.0, 60.0};
  const EnvelopeBand band =
      csr_envelope(pat, StatisticKind::K, grid, 199, 0.99, RandomStream(888));

  // direct sorted oracle over the same derived streams
  for (std::size_t j = 0; j < grid.size(); ++j) {
    std::vector<double> vals;
    for (int i = 0; i < 199; ++i) {
      RandomStream stream = RandomStream(888).derived(static_cast<std::uint64_t>(i));
      const PointPattern sim = gen_uniform_n(pat.window, 100, stream);
      vals.push_back(ripley_k(sim, grid).values[j]);
    }
    std::sort(vals.begin(), vals.end());
    CHECK(band.lower[j] == vals.front());
    CHECK(band.upper[j] == vals.back());
    CHECK(band.theory[j] == doctest::Approx(M_PI * grid[j] * grid[j]));
    CHECK(band.lower[j] <= band.upper[j]);
  }
}

TEST_CASE("too few simulations are rejected") {
  RandomStream rng(131);
  const PointPattern pat = gen_uniform_n(Window(0, 100, 0, 100), 50, rng);
  CHECK_THROWS_AS(csr_envelope(pat, StatisticKind::K, {10.0}, 50, 0.99, rng),
                  InsufficientSims);
}

TEST_CASE("relative neighbourhood density") {
  PointPattern far({{10, 10}, {90, 90}}, Window(0, 100, 0, 100));
  CHECK(relative_neighbourhood_density(far, 10.0) == doctest::Approx(0.0));

  // CSR mean near 1 over seeds
  const int seeds = 100;
  double total = 0;
  for (int i = 0; i < seeds; ++i) {
    RandomStream rng(7000 + static_cast<std::uint64_t>(i));
    total += relative_neighbourhood_density(
        gen_uniform_n(Window(0, 500, 0, 500), 500, rng), 10.0);
  }
  CHECK(total / seeds == doctest::Approx(1.0).epsilon(0.05));
}
