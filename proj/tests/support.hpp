#pragma once

// Random generators for property tests. Each draws from a fixed seed so a
// failure reproduces; the case index is printed by the assertions.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "neutro/neutro.hpp"

namespace neutro::testing {

inline constexpr int kCases = 2000;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }

  bool coin() { return integer(0, 1) == 1; }

  // Unit values with extra weight on the ends of [0, 1] and on two-decimal
  // grid points, where boundary bugs live.
  double component() {
    switch (integer(0, 9)) {
      case 0: return 0.0;
      case 1: return 1.0;
      case 2:
      case 3: return static_cast<double>(integer(0, 100)) / 100.0;
      default: return unit();
    }
  }

  // Dyadic rationals k / 2^10: every operation on them is exact.
  double dyadic() { return static_cast<double>(integer(0, 1024)) / 1024.0; }

  Triplet triplet() { return {component(), component(), component()}; }

  // Uniform in the simplex {t + i + f <= 1}.
  Triplet iifs_triplet() {
    for (;;) {
      Triplet x(component(), component(), component());
      if (x.sum() <= 1.0) return x;
      std::array<double, 4> e{};
      double total = 0.0;
      for (auto& v : e) {
        v = -std::log(1.0 - unit());
        total += v;
      }
      Triplet y(e[0] / total, e[1] / total, e[2] / total);
      if (y.sum() <= 1.0) return y;
    }
  }

  // Sums to 1 within rounding: a valid IFS triplet.
  Triplet ifs_triplet() {
    const double t = unit();
    const double f = unit() * (1.0 - t);
    return {t, std::max(0.0, 1.0 - t - f), f};
  }

  // (T, F) with T^p + F^p <= 1.
  Pair pair_within(double p) {
    for (;;) {
      const double t = component(), f = component();
      if (std::pow(t, p) + std::pow(f, p) <= 1.0) return {t, f};
    }
  }

  // (T, I, F) with T^p + I^p + F^p <= 1.
  Triplet triplet_within(double p) {
    for (;;) {
      const Triplet x = triplet();
      if (std::pow(x.t, p) + std::pow(x.i, p) + std::pow(x.f, p) <= 1.0) {
        return x;
      }
    }
  }

  std::vector<double> weights(std::size_t n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& v : w) {
      v = unit() + 1e-3;
      total += v;
    }
    for (auto& v : w) v /= total;
    return w;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace neutro::testing
