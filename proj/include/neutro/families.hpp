#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/core.hpp"

namespace neutro {

enum class FamilyKind {
  FS,     // fuzzy
  IFS,    // intuitionistic fuzzy
  IIFS,   // inconsistent intuitionistic = picture = ternary fuzzy
  NS,     // single-valued neutrosophic
  PyFS,   // Pythagorean fuzzy
  QROFS,  // q-rung orthopair fuzzy
  SFS,    // spherical fuzzy
  NHSFS,  // n-hyperspherical fuzzy
  SNS,    // spherical neutrosophic
  NHSNS,  // n-hyperspherical neutrosophic
};

inline constexpr std::string_view to_string(FamilyKind k) noexcept {
  switch (k) {
    case FamilyKind::FS: return "FS";
    case FamilyKind::IFS: return "IFS";
    case FamilyKind::IIFS: return "IIFS";
    case FamilyKind::NS: return "NS";
    case FamilyKind::PyFS: return "PyFS";
    case FamilyKind::QROFS: return "QROFS";
    case FamilyKind::SFS: return "SFS";
    case FamilyKind::NHSFS: return "NHSFS";
    case FamilyKind::SNS: return "SNS";
    case FamilyKind::NHSNS: return "NHSNS";
  }
  return "?";
}

inline FamilyKind parse_family_kind(std::string_view s) {
  for (auto k : {FamilyKind::FS, FamilyKind::IFS, FamilyKind::IIFS,
                 FamilyKind::NS, FamilyKind::PyFS, FamilyKind::QROFS,
                 FamilyKind::SFS, FamilyKind::NHSFS, FamilyKind::SNS,
                 FamilyKind::NHSNS}) {
    if (to_string(k) == s) return k;
  }
  // Common aliases for the picture/ternary and second-type names.
  if (s == "PFS" || s == "TFS") return FamilyKind::IIFS;
  if (s == "AIFS2") return FamilyKind::PyFS;
  throw UsageError("unknown family '" + std::string(s) + "'");
}

/// A set family: its kind plus the exponent used by the q-rung and
/// hyperspherical kinds (q or n; ignored elsewhere).
class FamilySpec {
 public:
  constexpr FamilySpec() noexcept = default;

  explicit FamilySpec(FamilyKind kind, double exponent = 1.0)
      : kind_(kind), exponent_(exponent) {
    if (uses_exponent()) {
      if (!(exponent >= 1.0 && std::isfinite(exponent))) {
        throw UsageError("family " + std::string(to_string(kind)) +
                         " needs an exponent >= 1, got " +
                         detail::format_real(exponent));
      }
    } else {
      exponent_ = (kind == FamilyKind::SFS || kind == FamilyKind::SNS) ? 2.0
                                                                        : 1.0;
    }
  }

  static FamilySpec fs() { return FamilySpec(FamilyKind::FS); }
  static FamilySpec ifs() { return FamilySpec(FamilyKind::IFS); }
  static FamilySpec iifs() { return FamilySpec(FamilyKind::IIFS); }
  static FamilySpec ns() { return FamilySpec(FamilyKind::NS); }
  static FamilySpec pyfs() { return FamilySpec(FamilyKind::PyFS); }
  static FamilySpec qrofs(double q) { return FamilySpec(FamilyKind::QROFS, q); }
  static FamilySpec sfs() { return FamilySpec(FamilyKind::SFS); }
  static FamilySpec nhsfs(double n) { return FamilySpec(FamilyKind::NHSFS, n); }
  static FamilySpec sns() { return FamilySpec(FamilyKind::SNS); }
  static FamilySpec nhsns(double n) { return FamilySpec(FamilyKind::NHSNS, n); }

  constexpr FamilyKind kind() const noexcept { return kind_; }
  constexpr double exponent() const noexcept { return exponent_; }

  constexpr bool uses_exponent() const noexcept {
    return kind_ == FamilyKind::QROFS || kind_ == FamilyKind::NHSFS ||
           kind_ == FamilyKind::NHSNS;
  }

  /// Pair families carry (T, F); IFS also accepts a triplet with derived I.
  constexpr bool is_pair_family() const noexcept {
    return kind_ == FamilyKind::FS || kind_ == FamilyKind::IFS ||
           kind_ == FamilyKind::PyFS || kind_ == FamilyKind::QROFS;
  }

  /// Power applied to each component inside the constraint.
  constexpr double power() const noexcept {
    switch (kind_) {
      case FamilyKind::PyFS:
      case FamilyKind::SFS:
      case FamilyKind::SNS:
        return 2.0;
      case FamilyKind::QROFS:
      case FamilyKind::NHSFS:
      case FamilyKind::NHSNS:
        return exponent_;
      default:
        return 1.0;
    }
  }

  /// Upper bound of the powered component sum.
  constexpr double bound() const noexcept {
    switch (kind_) {
      case FamilyKind::NS:
      case FamilyKind::SNS:
      case FamilyKind::NHSNS:
        return 3.0;
      default:
        return 1.0;
    }
  }

  /// Largest admissible single component.
  double component_max() const noexcept {
    switch (kind_) {
      case FamilyKind::SNS: return std::sqrt(3.0);
      case FamilyKind::NHSNS: return std::pow(3.0, 1.0 / exponent_);
      default: return 1.0;
    }
  }

  std::string name() const {
    std::string s(to_string(kind_));
    if (uses_exponent()) s += "(" + detail::format_real(exponent_) + ")";
    return s;
  }

  friend constexpr bool operator==(const FamilySpec&,
                                   const FamilySpec&) noexcept = default;

 private:
  FamilyKind kind_ = FamilyKind::NS;
  double exponent_ = 1.0;
};

/// Outcome of checking components against a family constraint:
/// valid iff lower - eps <= constraint_value <= bound + eps and every
/// component lies in the family's range.
struct ValidationReport {
  bool valid = false;
  double constraint_value = 0.0;
  double lower = 0.0;
  double bound = 0.0;
  std::string diagnostics;
};

namespace detail {

inline double power_of(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  return std::pow(x, p);
}

inline double powered_sum(std::span<const double> xs, double p) {
  double s = 0.0;
  for (double x : xs) s += power_of(x, p);
  return s;
}

inline void check_arity(std::span<const double> xs, const FamilySpec& fam) {
  const auto n = xs.size();
  bool ok = false;
  switch (fam.kind()) {
    case FamilyKind::FS: ok = n == 1 || n == 2; break;
    case FamilyKind::IFS: ok = n == 2 || n == 3; break;
    case FamilyKind::PyFS:
    case FamilyKind::QROFS: ok = n == 2; break;
    default: ok = n == 3; break;
  }
  if (!ok) {
    throw UsageError("family " + fam.name() + " does not accept " +
                     std::to_string(n) + " components");
  }
}

// Constraint left-hand side without range checks or diagnostics; used by the
// sampler in its inner loop.
inline double constraint_value(std::span<const double> xs,
                               const FamilySpec& fam) {
  if (fam.kind() == FamilyKind::FS) return xs[0];
  return powered_sum(xs, fam.power());
}

}  // namespace detail

/// Checks component suprema against the family constraint. Components are
/// (T, F) for pair families, (T, I, F) otherwise; IFS also takes a triplet
/// whose indeterminacy must equal the remainder 1 - T - F.
inline ValidationReport validate_components(std::span<const double> sups,
                                            const FamilySpec& fam) {
  detail::check_arity(sups, fam);
  ValidationReport r;
  r.bound = fam.bound();
  r.constraint_value = detail::constraint_value(sups, fam);

  const bool ifs_triplet = fam.kind() == FamilyKind::IFS && sups.size() == 3;
  if (ifs_triplet) r.lower = 1.0;

  const double cmax = fam.component_max();
  std::string range_issue;
  for (std::size_t k = 0; k < sups.size(); ++k) {
    if (!(sups[k] >= 0.0 && sups[k] <= cmax + kEpsilon)) {
      range_issue = "component " + std::to_string(k) + " = " +
                    detail::format_real(sups[k]) + " outside [0, " +
                    detail::format_real(cmax) + "]";
      break;
    }
  }

  const bool in_bounds = r.constraint_value <= r.bound + kEpsilon &&
                         r.constraint_value >= r.lower - kEpsilon;
  r.valid = range_issue.empty() && in_bounds;

  std::ostringstream os;
  os << fam.name() << ": ";
  if (!range_issue.empty()) {
    os << range_issue;
  } else if (ifs_triplet) {
    os << "T + I + F = " << detail::format_real(r.constraint_value)
       << (in_bounds ? " = 1" : " != 1 (indeterminacy must be 1 - T - F)");
  } else {
    os << "constraint value " << detail::format_real(r.constraint_value)
       << (in_bounds ? " <= " : " > ") << detail::format_real(r.bound);
  }
  r.diagnostics = os.str();
  return r;
}

inline ValidationReport validate(const Triplet& x, const FamilySpec& fam) {
  const std::array<double, 3> v{x.t, x.i, x.f};
  return validate_components(v, fam);
}

inline ValidationReport validate(const Pair& x, const FamilySpec& fam) {
  const std::array<double, 2> v{x.t, x.f};
  return validate_components(v, fam);
}

// Interval components are judged by their suprema.
inline ValidationReport validate(const IntervalTriplet& x,
                                 const FamilySpec& fam) {
  const std::array<double, 3> v{x.t.sup(), x.i.sup(), x.f.sup()};
  return validate_components(v, fam);
}

inline ValidationReport validate(const IntervalPair& x, const FamilySpec& fam) {
  const std::array<double, 2> v{x.t.sup(), x.f.sup()};
  return validate_components(v, fam);
}

inline bool is_valid(const Triplet& x, const FamilySpec& fam) {
  return validate(x, fam).valid;
}

inline bool is_valid(const Pair& x, const FamilySpec& fam) {
  return validate(x, fam).valid;
}

namespace detail {

template <class Components>
void require_valid(const Components& x, const FamilySpec& fam) {
  auto r = validate(x, fam);
  if (!r.valid) throw ConstraintError(r.diagnostics);
}

// Root of a residual that may dip below zero by roundoff.
inline double residual_root(double residual, double p) {
  residual = std::max(0.0, residual);
  if (p == 1.0) return residual;
  if (p == 2.0) return std::sqrt(residual);
  return std::pow(residual, 1.0 / p);
}

}  // namespace detail

/// Hesitancy left over by a pair: 1 - T - F for IFS, the square root of
/// 1 - T^2 - F^2 for PyFS, the q-th root of 1 - T^q - F^q for QROFS.
inline UnitValue hesitancy(const Pair& x, const FamilySpec& fam) {
  switch (fam.kind()) {
    case FamilyKind::IFS:
    case FamilyKind::PyFS:
    case FamilyKind::QROFS: break;
    default:
      throw UsageError("hesitancy is not defined for family " + fam.name());
  }
  detail::require_valid(x, fam);
  const double p = fam.power();
  const double residual =
      1.0 - detail::power_of(x.t, p) - detail::power_of(x.f, p);
  return UnitValue(std::min(1.0, detail::residual_root(residual, p)));
}

/// Refusal degree of a triplet in the picture, spherical and n-hyperspherical
/// families. For NHSFS the n-th root is taken, which inverts the n-th powers
/// of the constraint (the square root printed in the literature only does so
/// for n = 2).
inline UnitValue refusal(const Triplet& x, const FamilySpec& fam) {
  switch (fam.kind()) {
    case FamilyKind::IIFS:
    case FamilyKind::SFS:
    case FamilyKind::NHSFS: break;
    default:
      throw UsageError("refusal is not defined for family " + fam.name());
  }
  detail::require_valid(x, fam);
  const double p = fam.power();
  const std::array<double, 3> v{x.t, x.i, x.f};
  const double residual = 1.0 - detail::powered_sum(v, p);
  return UnitValue(std::min(1.0, detail::residual_root(residual, p)));
}

/// Maps a valid pair into a neutrosophic triplet: powers of T and F with the
/// leftover as indeterminacy (sum exactly 1 up to roundoff).
inline Triplet embed_into_ns(const Pair& x, const FamilySpec& from) {
  switch (from.kind()) {
    case FamilyKind::IFS:
    case FamilyKind::PyFS:
    case FamilyKind::QROFS: break;
    default:
      throw UsageError("no pair embedding into NS for family " + from.name());
  }
  detail::require_valid(x, from);
  const double p = from.power();
  const double t = detail::power_of(x.t, p);
  const double f = detail::power_of(x.f, p);
  const double i = std::clamp(1.0 - t - f, 0.0, 1.0);
  return Triplet(t, i, f);
}

/// Maps a valid triplet into a neutrosophic triplet: componentwise powers for
/// the spherical kinds, identity for IFS/IIFS/NS.
inline Triplet embed_into_ns(const Triplet& x, const FamilySpec& from) {
  if (from.is_pair_family() && from.kind() != FamilyKind::IFS) {
    throw UsageError("family " + from.name() + " takes a pair, not a triplet");
  }
  detail::require_valid(x, from);
  switch (from.kind()) {
    case FamilyKind::IFS:
    case FamilyKind::IIFS:
    case FamilyKind::NS:
      return x;
    default: {
      const double p = from.power();
      return Triplet(detail::power_of(x.t, p), detail::power_of(x.i, p),
                     detail::power_of(x.f, p));
    }
  }
}

enum class StrictnessClaim { NsNotSfs, NsNotQrofs, NsNotNhsfs, NsNotIifs };

/// The family a claim says is strictly smaller than NS.
inline FamilySpec claim_target(StrictnessClaim claim, double exponent = 2.0) {
  switch (claim) {
    case StrictnessClaim::NsNotSfs: return FamilySpec::sfs();
    case StrictnessClaim::NsNotQrofs: return FamilySpec::qrofs(exponent);
    case StrictnessClaim::NsNotNhsfs: return FamilySpec::nhsfs(exponent);
    case StrictnessClaim::NsNotIifs: return FamilySpec::iifs();
  }
  return FamilySpec::ns();
}

/// Canonical NS-valid witness outside the claimed subfamily:
///   NsNotSfs   -> (0.9, 0.4, 0.5), squares sum to 1.22
///   NsNotQrofs -> (1, 0.5, 0.5), pair view (1, 0.5): 1 + 0.5^q > 1
///   NsNotNhsfs -> (1, 0.5, 0.5): 1 + 2 * 0.5^n > 1
///   NsNotIifs  -> (1, 1, 1), the paradox
/// Past an exponent of 16 the excess 0.5^q drowns in the validation
/// tolerance, so the witness becomes (1, 1, 1) there.
inline Triplet find_counterexample(StrictnessClaim claim,
                                   double exponent = 2.0) {
  (void)claim_target(claim, exponent);  // rejects exponents below 1
  const double g = exponent <= 16.0 ? 0.5 : 1.0;
  switch (claim) {
    case StrictnessClaim::NsNotSfs: return Triplet(0.9, 0.4, 0.5);
    case StrictnessClaim::NsNotQrofs: return Triplet(1.0, g, g);
    case StrictnessClaim::NsNotNhsfs: return Triplet(1.0, g, g);
    case StrictnessClaim::NsNotIifs: return Triplet(1.0, 1.0, 1.0);
  }
  return {};
}

/// Validates a witness against the claimed subfamily, projecting to (T, F)
/// for pair targets.
inline ValidationReport validate_against_claim(const Triplet& w,
                                               StrictnessClaim claim,
                                               double exponent = 2.0) {
  const auto target = claim_target(claim, exponent);
  if (target.is_pair_family()) return validate(Pair(w.t, w.f), target);
  return validate(w, target);
}

enum class CubeRegion { Incomplete, Complete, Paraconsistent };

inline constexpr std::string_view to_string(CubeRegion r) noexcept {
  switch (r) {
    case CubeRegion::Incomplete: return "Incomplete";
    case CubeRegion::Complete: return "Complete";
    case CubeRegion::Paraconsistent: return "Paraconsistent";
  }
  return "?";
}

/// Locates a point of the unit cube relative to the plane T + I + F = 1.
inline CubeRegion classify_cube_region(const Triplet& x,
                                       double tol = kEpsilon) {
  const double s = x.sum();
  if (s < 1.0 - tol) return CubeRegion::Incomplete;
  if (s > 1.0 + tol) return CubeRegion::Paraconsistent;
  return CubeRegion::Complete;
}

}  // namespace neutro
