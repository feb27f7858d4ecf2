#include <doctest.h>

#include <cmath>

#include "pointpat/knuth.hpp"
#include "pointpat/random.hpp"
#include "pointpat/stone.hpp"

using namespace pointpat;

TEST_CASE("two-sample hand computation") {
  const StoneResult result = stone_optimal_bins({0.0, 1.0}, 2);
  CHECK(result.m_hat == 1);
  CHECK(result.scores[0].k_value == doctest::Approx(0.0));
  CHECK(result.scores[1].k_value == doctest::Approx(1.0));
}

TEST_CASE("uniform m=1 score equals (2/N - 1)/range") {
  // dense uniform grid of samples
  std::vector<double> samples;
  for (int i = 0; i < 2000; ++i) samples.push_back(static_cast<double>(i) / 1999.0 * 4.0);
  const StoneResult result = stone_optimal_bins(samples, 30);
  CHECK(result.scores[0].k_value ==
        doctest::Approx((2.0 / 2000.0 - 1.0) / 4.0).epsilon(1e-12));
  for (const StoneScore& s : result.scores)
    CHECK(s.k_value >= result.scores[0].k_value - 1e-12);
  CHECK(result.m_hat == 1);
}

TEST_CASE("Stone picks more bins than Knuth on Gaussian data") {
  RandomStream rng(71);
  std::vector<double> samples(1000);
  for (double& s : samples) s = rng.normal();
  const StoneResult stone = stone_optimal_bins(samples, 50);
  const Knuth1DResult knuth = optimal_binning_1d(samples, 50);
  CHECK(stone.m_hat > knuth.m_hat);
}

TEST_CASE("distance to identical density is zero") {
  Histogram1D hist;
  hist.m = 1;
  hist.lo = 0;
  hist.hi = 1;
  hist.counts = {10};
  hist.heights = {1.0};
  auto uniform_pdf = [](double) { return 1.0; };
  CHECK(histogram_density_distance(hist, uniform_pdf, 1, 1e-4) == doctest::Approx(0.0));
  CHECK(histogram_density_distance(hist, uniform_pdf, 2, 1e-4) == doctest::Approx(0.0));
}

TEST_CASE("closed-form L1 distance against 2x density") {
  Histogram1D hist;
  hist.m = 1;
  hist.lo = 0;
  hist.hi = 1;
  hist.counts = {10};
  hist.heights = {1.0};
  auto ramp = [](double x) { return 2.0 * x; };
  CHECK(histogram_density_distance(hist, ramp, 1, 1e-5) ==
        doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("coarse quadrature matches a refined oracle") {
  RandomStream rng(81);
  std::vector<double> samples(1000);
  for (double& s : samples) s = rng.normal();
  const Histogram1D hist = fixed_bin_histogram(samples, 13);
  auto normal_pdf = [](double x) { return std::exp(-x * x / 2.0) / std::sqrt(2.0 * M_PI); };
  const double coarse = histogram_density_distance(hist, normal_pdf, 2, 1e-2);
  const double fine = histogram_density_distance(hist, normal_pdf, 2, 1e-4);
  CHECK(coarse == doctest::Approx(fine).epsilon(1e-3));
}

TEST_CASE("unnormalized histogram is rejected") {
  Histogram1D hist;
  hist.m = 1;
  hist.lo = 0;
  hist.hi = 1;
  hist.counts = {10};
  hist.heights = {0.9};
  CHECK_THROWS_AS(
      histogram_density_distance(hist, [](double) { return 1.0; }, 2, 1e-3), BadNorm);
}

TEST_CASE("degenerate samples are rejected") {
  CHECK_THROWS_AS(stone_optimal_bins({3.0, 3.0, 3.0}, 5), DegenerateSpan);
}
