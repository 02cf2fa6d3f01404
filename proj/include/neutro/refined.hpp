#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "neutro/families.hpp"

namespace neutro {

/// Split components: T into p sub-degrees, I into r, F into s. C is double
/// for single-valued components or IntervalValue for closed intervals.
template <class C = double>
struct BasicRefinedComponents {
  std::vector<C> ts;
  std::vector<C> is;
  std::vector<C> fs;

  std::size_t p() const noexcept { return ts.size(); }
  std::size_t r() const noexcept { return is.size(); }
  std::size_t s() const noexcept { return fs.size(); }
  std::size_t total() const noexcept { return p() + r() + s(); }

  friend bool operator==(const BasicRefinedComponents&,
                         const BasicRefinedComponents&) = default;
};

using RefinedComponents = BasicRefinedComponents<double>;
using RefinedIntervalComponents = BasicRefinedComponents<IntervalValue>;

enum class RefinedKind { RFS, RIFS, RIIFS, RNS, RPyFS, RSFS, RQROFS, RNHSNS };

inline constexpr std::string_view to_string(RefinedKind k) noexcept {
  switch (k) {
    case RefinedKind::RFS: return "RFS";
    case RefinedKind::RIFS: return "RIFS";
    case RefinedKind::RIIFS: return "RIIFS";
    case RefinedKind::RNS: return "RNS";
    case RefinedKind::RPyFS: return "RPyFS";
    case RefinedKind::RSFS: return "RSFS";
    case RefinedKind::RQROFS: return "RQROFS";
    case RefinedKind::RNHSNS: return "RNHSNS";
  }
  return "?";
}

inline RefinedKind parse_refined_kind(std::string_view s) {
  for (auto k : {RefinedKind::RFS, RefinedKind::RIFS, RefinedKind::RIIFS,
                 RefinedKind::RNS, RefinedKind::RPyFS, RefinedKind::RSFS,
                 RefinedKind::RQROFS, RefinedKind::RNHSNS}) {
    if (to_string(k) == s) return k;
  }
  if (s == "RPFS" || s == "RTFS") return RefinedKind::RIIFS;
  throw UsageError("unknown refined family '" + std::string(s) + "'");
}

class RefinedFamilySpec {
 public:
  explicit RefinedFamilySpec(RefinedKind kind, double exponent = 1.0)
      : kind_(kind), exponent_(exponent) {
    if (uses_exponent()) {
      if (!(exponent >= 1.0 && std::isfinite(exponent))) {
        throw UsageError("refined family " + std::string(to_string(kind)) +
                         " needs an exponent >= 1");
      }
    } else {
      exponent_ = 1.0;
    }
  }

  RefinedKind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return exponent_; }

  bool uses_exponent() const noexcept {
    return kind_ == RefinedKind::RQROFS || kind_ == RefinedKind::RNHSNS;
  }

  double power() const noexcept {
    switch (kind_) {
      case RefinedKind::RPyFS:
      case RefinedKind::RSFS: return 2.0;
      case RefinedKind::RQROFS:
      case RefinedKind::RNHSNS: return exponent_;
      default: return 1.0;
    }
  }

  std::string name() const {
    std::string s(to_string(kind_));
    if (uses_exponent()) s += "(" + detail::format_real(exponent_) + ")";
    return s;
  }

 private:
  RefinedKind kind_;
  double exponent_;
};

/// Strict enforces the minimum total arity of a genuine refinement
/// (p >= 2 for RFS, p + s >= 3 for the pair kinds, p + r + s >= 4 for the
/// triple kinds). AllowDegenerate admits the one-per-slot shapes that coincide
/// with the unrefined family, which is how reductions are checked.
enum class ArityPolicy { Strict, AllowDegenerate };

namespace detail {

template <class C>
void check_refined_arity(const BasicRefinedComponents<C>& c,
                         const RefinedFamilySpec& fam, ArityPolicy policy) {
  const bool strict = policy == ArityPolicy::Strict;
  const auto p = c.p(), r = c.r(), s = c.s();
  bool ok = false;
  switch (fam.kind()) {
    case RefinedKind::RFS:
      ok = r == 0 && s == 0 && p >= (strict ? 2u : 1u);
      break;
    case RefinedKind::RIFS:
    case RefinedKind::RPyFS:
    case RefinedKind::RQROFS:
      ok = r == 0 && p >= 1 && s >= 1 && p + s >= (strict ? 3u : 2u);
      break;
    case RefinedKind::RIIFS:
    case RefinedKind::RNS:
    case RefinedKind::RSFS:
    case RefinedKind::RNHSNS:
      ok = p >= 1 && r >= 1 && s >= 1 && p + r + s >= (strict ? 4u : 3u);
      break;
  }
  if (!ok) {
    throw UsageError("arity (p, r, s) = (" + std::to_string(p) + ", " +
                     std::to_string(r) + ", " + std::to_string(s) +
                     ") not admissible for " + fam.name());
  }
}

template <class C, class Proj>
double powered_refined_sum(const BasicRefinedComponents<C>& c, double power,
                           Proj proj) {
  double sum = 0.0;
  for (const auto* slot : {&c.ts, &c.is, &c.fs}) {
    for (const auto& x : *slot) sum += power_of(proj(x), power);
  }
  return sum;
}

}  // namespace detail

/// Checks the refined constraint on component suprema. The bound is 1 for the
/// fuzzy-side kinds, n = p + r + s for RNS and m = p + r + s for RNHSNS, whose
/// sub-components range over [0, m^(1/n)].
template <class C>
ValidationReport validate_refined(const BasicRefinedComponents<C>& c,
                                  const RefinedFamilySpec& fam,
                                  ArityPolicy policy = ArityPolicy::Strict) {
  detail::check_refined_arity(c, fam, policy);
  const double m = static_cast<double>(c.total());
  ValidationReport r;
  r.bound = (fam.kind() == RefinedKind::RNS ||
             fam.kind() == RefinedKind::RNHSNS)
                ? m
                : 1.0;
  const double cmax = fam.kind() == RefinedKind::RNHSNS
                          ? std::pow(m, 1.0 / fam.exponent())
                          : 1.0;

  std::string range_issue;
  for (const auto* slot : {&c.ts, &c.is, &c.fs}) {
    for (const auto& x : *slot) {
      const double v = sup_of(x);
      if (!(inf_of(x) >= 0.0 && v <= cmax + kEpsilon)) {
        range_issue = "sub-component " + detail::format_real(v) +
                      " outside [0, " + detail::format_real(cmax) + "]";
      }
    }
  }

  r.constraint_value = detail::powered_refined_sum(
      c, fam.power(), [](const C& x) { return sup_of(x); });
  const bool in_bound = r.constraint_value <= r.bound + kEpsilon;
  r.valid = range_issue.empty() && in_bound;
  r.diagnostics =
      fam.name() + ": " +
      (range_issue.empty()
           ? "constraint value " + detail::format_real(r.constraint_value) +
                 (in_bound ? " <= " : " > ") + detail::format_real(r.bound)
           : range_issue);
  return r;
}

namespace detail {

// 1 minus the powered sums, rooted. Scalars give one value; intervals give
// [from sups, from infs].
template <class C>
auto residual_degree(const BasicRefinedComponents<C>& c, double power) {
  const double lo = residual_root(
      1.0 - powered_refined_sum(c, power, [](const C& x) { return sup_of(x); }),
      power);
  if constexpr (std::is_same_v<C, IntervalValue>) {
    const double hi = residual_root(
        1.0 -
            powered_refined_sum(c, power, [](const C& x) { return inf_of(x); }),
        power);
    return IntervalValue(std::min(lo, 1.0), std::min(hi, 1.0));
  } else {
    return UnitValue(std::min(lo, 1.0));
  }
}

template <class C>
void require_refined_valid(const BasicRefinedComponents<C>& c,
                           const RefinedFamilySpec& fam, ArityPolicy policy) {
  auto r = validate_refined(c, fam, policy);
  if (!r.valid) throw ConstraintError(r.diagnostics);
}

}  // namespace detail

/// Hesitancy of RPyFS (square root of 1 minus the squared sums) and RQROFS
/// (q-th root of 1 minus the q-powered sums).
template <class C>
auto refined_hesitancy(const BasicRefinedComponents<C>& c,
                       const RefinedFamilySpec& fam,
                       ArityPolicy policy = ArityPolicy::Strict) {
  if (fam.kind() != RefinedKind::RPyFS && fam.kind() != RefinedKind::RQROFS) {
    throw UsageError("refined hesitancy is not defined for " + fam.name());
  }
  detail::require_refined_valid(c, fam, policy);
  return detail::residual_degree(c, fam.power());
}

/// Refusal of RSFS (square root of 1 minus the squared sums) and RIIFS
/// (1 minus the plain sums; an interval when the inputs are intervals).
template <class C>
auto refined_refusal(const BasicRefinedComponents<C>& c,
                     const RefinedFamilySpec& fam,
                     ArityPolicy policy = ArityPolicy::Strict) {
  if (fam.kind() != RefinedKind::RSFS && fam.kind() != RefinedKind::RIIFS) {
    throw UsageError("refined refusal is not defined for " + fam.name());
  }
  detail::require_refined_valid(c, fam, policy);
  return detail::residual_degree(c, fam.power());
}

struct Arities {
  std::size_t p = 1;
  std::size_t r = 1;
  std::size_t s = 1;
};

/// Per-slot split weights; each nonempty slot must sum to 1.
struct RefineWeights {
  std::vector<double> t;
  std::vector<double> i;
  std::vector<double> f;

  static RefineWeights equal(Arities a) {
    auto eq = [](std::size_t n) {
      return std::vector<double>(n, n ? 1.0 / static_cast<double>(n) : 0.0);
    };
    return {eq(a.p), eq(a.r), eq(a.s)};
  }
};

namespace detail {

inline std::vector<double> split_component(double value,
                                           std::span<const double> weights,
                                           std::string_view slot) {
  if (weights.empty()) {
    if (value != 0.0) {
      throw UsageError(std::string(slot) +
                       " is nonzero but has no sub-components");
    }
    return {};
  }
  double wsum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw UsageError(std::string(slot) + " weight " + format_real(w) +
                       " is negative");
    }
    wsum += w;
  }
  if (!approx_equal(wsum, 1.0)) {
    throw UsageError(std::string(slot) + " weights sum to " +
                     format_real(wsum) + ", not 1");
  }
  // Coarsen sums the shares left to right and must give back value bit for
  // bit. The plain split usually does. When it does not, the leading shares
  // are rounded to multiples of the spacing of doubles at value: sums of such
  // multiples up to value are exact, so the last share is an exact remainder.
  std::vector<double> out(weights.size(), 0.0);
  if (value == 0.0) return out;
  const double u = std::nextafter(value, INFINITY) - value;
  for (bool quantize : {false, true}) {
    double partial = 0.0;
    for (std::size_t k = 0; k + 1 < weights.size(); ++k) {
      double q = value * weights[k];
      if (quantize) q = std::round(q / u) * u;
      out[k] = std::min(q, value - partial);
      partial += out[k];
    }
    out.back() = std::max(0.0, value - partial);
    if (partial + out.back() == value) break;
  }
  return out;
}

}  // namespace detail

inline RefinedComponents refine(const Triplet& x, Arities a,
                                const RefineWeights& w) {
  if (w.t.size() != a.p || w.i.size() != a.r || w.f.size() != a.s) {
    throw UsageError("weight vector lengths do not match the arities");
  }
  return {detail::split_component(x.t, w.t, "T"),
          detail::split_component(x.i, w.i, "I"),
          detail::split_component(x.f, w.f, "F")};
}

inline RefinedComponents refine(const Triplet& x, Arities a) {
  return refine(x, a, RefineWeights::equal(a));
}

/// Sums each slot's sub-components back into one component.
inline Triplet coarsen(const RefinedComponents& c) {
  auto total = [](const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
  };
  return Triplet(total(c.ts), total(c.is), total(c.fs));
}

}  // namespace neutro
