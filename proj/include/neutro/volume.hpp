#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>

#include "neutro/families.hpp"

namespace neutro {

struct VolumeEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  int dimension = 3;  // 2 for pair families (unit square), else unit cube
};

namespace detail {

// SplitMix64 finalizer. Draw k of point j depends only on (seed, j, k), so any
// sharding of the index range reproduces the sequential result bit for bit.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr double counter_uniform(std::uint64_t seed, std::uint64_t index,
                                 unsigned coord) noexcept {
  const std::uint64_t key = mix64(seed) ^ (index * 4 + coord);
  return static_cast<double>(mix64(key) >> 11) * 0x1.0p-53;
}

}  // namespace detail

namespace detail {

inline int sample_dimension(const FamilySpec& fam) {
  if (fam.kind() == FamilyKind::FS) return 1;
  return fam.is_pair_family() ? 2 : 3;
}

}  // namespace detail

/// Number of sample points with index in [first, last) that satisfy the
/// family constraint. Counts over disjoint ranges add up to the count over
/// their union, whatever the split.
inline std::uint64_t count_family_hits(const FamilySpec& fam,
                                       std::uint64_t first, std::uint64_t last,
                                       std::uint64_t seed) {
  const int dim = detail::sample_dimension(fam);
  const double bound = fam.bound() + kEpsilon;
  std::uint64_t hits = 0;
  std::array<double, 3> p{};
  for (std::uint64_t j = first; j < last; ++j) {
    for (int k = 0; k < dim; ++k) p[k] = detail::counter_uniform(seed, j, k);
    const std::span<const double> pt(p.data(), static_cast<std::size_t>(dim));
    if (detail::constraint_value(pt, fam) <= bound) ++hits;
  }
  return hits;
}

/// Fraction of the unit cube (unit square for pair families) whose points
/// satisfy the family constraint, with its binomial standard error.
inline VolumeEstimate estimate_family_volume(const FamilySpec& fam,
                                             std::uint64_t samples,
                                             std::uint64_t seed) {
  if (samples < 1) throw UsageError("volume estimate needs at least 1 sample");
  VolumeEstimate r;
  r.samples = samples;
  r.dimension = detail::sample_dimension(fam);
  r.estimate = static_cast<double>(count_family_hits(fam, 0, samples, seed)) /
               static_cast<double>(samples);
  r.std_error =
      std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(samples));
  return r;
}

/// Closed-form volume of the constraint region inside the unit cube/square.
/// The region {x_k >= 0, sum x_k^p <= 1} in d dimensions has volume
/// Gamma(1 + 1/p)^d / Gamma(1 + d/p); the neutrosophic kinds fill the cube.
inline std::optional<double> analytic_family_volume(const FamilySpec& fam) {
  auto ball_orthant = [](double p, int d) {
    return std::pow(std::tgamma(1.0 + 1.0 / p), d) / std::tgamma(1.0 + d / p);
  };
  switch (fam.kind()) {
    case FamilyKind::FS:
    case FamilyKind::NS:
    case FamilyKind::SNS:
    case FamilyKind::NHSNS:
      return 1.0;
    case FamilyKind::IFS:
    case FamilyKind::PyFS:
    case FamilyKind::QROFS:
      return ball_orthant(fam.power(), 2);
    case FamilyKind::IIFS:
    case FamilyKind::SFS:
    case FamilyKind::NHSFS:
      return ball_orthant(fam.power(), 3);
  }
  return std::nullopt;
}

}  // namespace neutro
