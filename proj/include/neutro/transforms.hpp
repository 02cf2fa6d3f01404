#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "neutro/labeled_set.hpp"

namespace neutro {

struct SupTransformResult {
  LabeledSet set;                // IIFS-tagged
  std::vector<double> refusals;  // 1 - T' - I' - F' per element
  double denominator = 0.0;      // sup T + sup I + sup F over the universe
};

/// Rescales every component by the set-wide sum of component suprema,
/// restraining a neutrosophic set to picture (IIFS) components. Two phases:
/// the reduction over the whole universe must finish before any element is
/// mapped.
inline SupTransformResult sup_transform(const LabeledSet& s) {
  double sup_t = 0.0, sup_i = 0.0, sup_f = 0.0;
  for (const auto& x : s.elements()) {
    sup_t = std::max(sup_t, x.t.value());
    sup_i = std::max(sup_i, x.i.value());
    sup_f = std::max(sup_f, x.f.value());
  }
  const double denom = sup_t + sup_i + sup_f;
  if (denom == 0.0) {
    throw DegenerateInputError(
        "sup transform: sum of component suprema is zero");
  }

  SupTransformResult r;
  r.denominator = denom;
  std::vector<Triplet> out;
  out.reserve(s.size());
  r.refusals.reserve(s.size());
  for (const auto& x : s.elements()) {
    Triplet y(x.t / denom, x.i / denom, x.f / denom);
    out.push_back(y);
    r.refusals.push_back(std::clamp(1.0 - y.t - y.i - y.f, 0.0, 1.0));
  }
  r.set = LabeledSet(s.universe(), std::move(out), FamilySpec::iifs());
  return r;
}

/// Divides each element by its own component sum, yielding IFS triplets that
/// sum to 1. An all-zero element has no image and is reported by name.
inline LabeledSet normalize_elementwise(const LabeledSet& s) {
  std::vector<Triplet> out;
  out.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto& x = s[k];
    const double sum = x.sum();
    if (sum == 0.0) {
      throw DegenerateInputError("normalization: element '" + s.name(k) +
                                 "' has zero component sum");
    }
    out.emplace_back(x.t / sum, x.i / sum, x.f / sum);
  }
  return LabeledSet(s.universe(), std::move(out), FamilySpec::ifs());
}

/// Single-element form of normalize_elementwise.
inline Triplet normalize(const Triplet& x) {
  return normalize_elementwise(LabeledSet({"x"}, {x})).at(0);
}

struct ParadoxReport {
  bool is_paradox = false;  // exactly (1, 1, 1)
  bool ns_valid = false;
  bool iifs_valid = false;
  std::optional<Triplet> normalized;  // empty for the all-zero triplet
  bool normalized_is_paradox = false;
};

/// A paradox is fully true, fully false and fully indeterminate at once.
/// Normalizing it to a sum of 1 yields (1/3, 1/3, 1/3), which is not.
inline ParadoxReport paradox_check(const Triplet& x) {
  ParadoxReport r;
  const Triplet paradox(1.0, 1.0, 1.0);
  r.is_paradox = x == paradox;
  r.ns_valid = is_valid(x, FamilySpec::ns());
  r.iifs_valid = is_valid(x, FamilySpec::iifs());
  if (x.sum() != 0.0) {
    r.normalized = normalize(x);
    r.normalized_is_paradox = *r.normalized == paradox;
  }
  return r;
}

struct DivergenceReport {
  std::vector<std::array<double, 3>> deltas;  // a - b per element
  double max_abs_delta = 0.0;
  double tolerance = 0.0;
  bool differ = false;  // max_abs_delta > tolerance
};

inline DivergenceReport divergence_report(const LabeledSet& a,
                                          const LabeledSet& b,
                                          double tol = kPrintedTolerance) {
  require_same_universe(a, b);
  DivergenceReport r;
  r.tolerance = tol;
  r.deltas.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::array<double, 3> d{a[k].t - b[k].t, a[k].i - b[k].i,
                                  a[k].f - b[k].f};
    for (double v : d) r.max_abs_delta = std::max(r.max_abs_delta, std::fabs(v));
    r.deltas.push_back(d);
  }
  r.differ = r.max_abs_delta > tol;
  return r;
}

}  // namespace neutro
