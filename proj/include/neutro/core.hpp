#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "neutro/errors.hpp"

namespace neutro {

// Absolute tolerance for comparing real-valued components.
inline constexpr double kEpsilon = 1e-9;

// Published tables round to two decimals; comparisons against them use this.
inline constexpr double kPrintedTolerance = 0.01;

inline bool approx_equal(double a, double b, double tol = kEpsilon) noexcept {
  return std::fabs(a - b) <= tol;
}

namespace detail {
inline std::string format_real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}
}  // namespace detail

/// A membership degree in the closed unit interval.
class UnitValue {
 public:
  constexpr UnitValue() noexcept = default;

  explicit UnitValue(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw RangeError("value " + detail::format_real(v) +
                           " lies outside [0, 1]",
                       v);
    }
  }

  constexpr double value() const noexcept { return v_; }
  constexpr operator double() const noexcept { return v_; }

  friend constexpr bool operator==(UnitValue, UnitValue) noexcept = default;
  friend constexpr auto operator<=>(UnitValue, UnitValue) noexcept = default;

 private:
  double v_ = 0.0;
};

inline UnitValue make_unit(double v) { return UnitValue(v); }

/// Closed subinterval [lo, hi] of [0, 1]. A degenerate interval stands in
/// for the scalar it contains.
class IntervalValue {
 public:
  constexpr IntervalValue() noexcept = default;

  IntervalValue(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo >= 0.0 && lo <= 1.0)) {
      throw RangeError("interval lower end " + detail::format_real(lo) +
                           " lies outside [0, 1]",
                       lo);
    }
    if (!(hi >= 0.0 && hi <= 1.0)) {
      throw RangeError("interval upper end " + detail::format_real(hi) +
                           " lies outside [0, 1]",
                       hi);
    }
    if (lo > hi) {
      throw RangeError("interval is empty: lo " + detail::format_real(lo) +
                           " > hi " + detail::format_real(hi),
                       lo);
    }
  }

  explicit IntervalValue(UnitValue v) noexcept : lo_(v), hi_(v) {}

  constexpr double lo() const noexcept { return lo_; }
  constexpr double hi() const noexcept { return hi_; }
  constexpr double inf() const noexcept { return lo_; }
  constexpr double sup() const noexcept { return hi_; }
  constexpr bool degenerate() const noexcept { return lo_ == hi_; }

  std::optional<UnitValue> as_unit() const {
    if (!degenerate()) return std::nullopt;
    return UnitValue(lo_);
  }

  friend constexpr bool operator==(const IntervalValue&,
                                   const IntervalValue&) noexcept = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// Uniform access for code generic over scalar and interval components.
constexpr double sup_of(double v) noexcept { return v; }
constexpr double inf_of(double v) noexcept { return v; }
constexpr double sup_of(UnitValue v) noexcept { return v; }
constexpr double inf_of(UnitValue v) noexcept { return v; }
constexpr double sup_of(const IntervalValue& v) noexcept { return v.sup(); }
constexpr double inf_of(const IntervalValue& v) noexcept { return v.inf(); }

/// Truth, indeterminacy and falsehood degrees with no joint constraint.
struct Triplet {
  UnitValue t;
  UnitValue i;
  UnitValue f;

  constexpr Triplet() noexcept = default;
  constexpr Triplet(UnitValue t_, UnitValue i_, UnitValue f_) noexcept
      : t(t_), i(i_), f(f_) {}
  Triplet(double t_, double i_, double f_)
      : t(UnitValue(t_)), i(UnitValue(i_)), f(UnitValue(f_)) {}

  double sum() const noexcept { return t + i + f; }
  std::array<double, 3> values() const noexcept { return {t, i, f}; }

  friend constexpr bool operator==(const Triplet&,
                                   const Triplet&) noexcept = default;
};

/// Membership and nonmembership degrees.
struct Pair {
  UnitValue t;
  UnitValue f;

  constexpr Pair() noexcept = default;
  constexpr Pair(UnitValue t_, UnitValue f_) noexcept : t(t_), f(f_) {}
  Pair(double t_, double f_) : t(UnitValue(t_)), f(UnitValue(f_)) {}

  friend constexpr bool operator==(const Pair&, const Pair&) noexcept =
      default;
};

struct IntervalTriplet {
  IntervalValue t;
  IntervalValue i;
  IntervalValue f;

  static IntervalTriplet from(const Triplet& x) {
    return {IntervalValue(x.t), IntervalValue(x.i), IntervalValue(x.f)};
  }
};

struct IntervalPair {
  IntervalValue t;
  IntervalValue f;

  static IntervalPair from(const Pair& x) {
    return {IntervalValue(x.t), IntervalValue(x.f)};
  }
};

inline bool approx_equal(const Triplet& a, const Triplet& b,
                         double tol = kEpsilon) noexcept {
  return approx_equal(a.t, b.t, tol) && approx_equal(a.i, b.i, tol) &&
         approx_equal(a.f, b.f, tol);
}

/// Largest admissible sum of two unit components whose degree of dependence
/// is d: 1 when totally dependent, 2 when independent.
inline double dependence_sum_bound(double d) {
  if (!(d >= 0.0 && d <= 1.0)) {
    throw DomainError("dependence degree " + detail::format_real(d) +
                      " lies outside [0, 1]");
  }
  return 2.0 - d;
}

inline std::ostream& operator<<(std::ostream& os, const Triplet& x) {
  return os << '(' << x.t.value() << ", " << x.i.value() << ", "
            << x.f.value() << ')';
}

inline std::ostream& operator<<(std::ostream& os, const Pair& x) {
  return os << '(' << x.t.value() << ", " << x.f.value() << ')';
}

}  // namespace neutro
