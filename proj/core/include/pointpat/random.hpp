#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace pointpat {

/// Deterministic random stream.  The engine is std::mt19937_64, whose
/// output sequence is fixed by the standard, and every distribution is
/// implemented here rather than through std:: distributions (whose
/// algorithms vary across standard libraries).  Identical seed therefore
/// means identical sequence on every platform.
///
/// Normal variates use the Box-Muller transform with the second variate
/// of each pair cached.  Poisson variates use exponential inter-arrival
/// counting.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Stream i derived from a base seed is RandomStream(base + i).
  RandomStream derived(std::uint64_t i) const { return RandomStream(seed_ + i); }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1]; safe as a log argument.
  double uniform_pos() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Integer uniform on [0, n) by rejection-free scaling.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  /// Poisson by counting unit-exponential arrivals; O(mean) per draw.
  long poisson(double mean) {
    long k = 0;
    double s = 0.0;
    for (;;) {
      s += -std::log(uniform_pos());
      if (s > mean) return k;
      ++k;
    }
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace pointpat
