#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "neutro/families.hpp"

namespace neutro {

enum class TNorm { Min, Product };
enum class TConorm { Max, ProbSum };

/// A t-norm / t-conorm pair. Min/Max is the default and the simplest pair.
struct NormPair {
  TNorm tnorm = TNorm::Min;
  TConorm tconorm = TConorm::Max;

  static constexpr NormPair min_max() noexcept { return {}; }
  static constexpr NormPair product() noexcept {
    return {TNorm::Product, TConorm::ProbSum};
  }

  constexpr double t(double a, double b) const noexcept {
    return tnorm == TNorm::Min ? std::min(a, b) : a * b;
  }
  constexpr double s(double a, double b) const noexcept {
    return tconorm == TConorm::Max ? std::max(a, b) : a + b - a * b;
  }

  friend constexpr bool operator==(const NormPair&,
                                   const NormPair&) noexcept = default;
};

enum class System {
  IFS,        // indeterminacy is the remainder 1 - T - F
  NS,         // indeterminacy aggregated like T and F
  IIFS_MaxI,  // min/max/max conjunction, rescaled when the sum exceeds 1
  IIFS_MinI,  // min/min/max conjunction (Cuong's convention)
};

inline constexpr std::string_view to_string(System s) noexcept {
  switch (s) {
    case System::IFS: return "IFS";
    case System::NS: return "NS";
    case System::IIFS_MaxI: return "IIFS";
    case System::IIFS_MinI: return "IIFS2";
  }
  return "?";
}

inline System parse_system(std::string_view s) {
  if (s == "IFS") return System::IFS;
  if (s == "NS") return System::NS;
  if (s == "IIFS" || s == "IIFS_MaxI") return System::IIFS_MaxI;
  if (s == "IIFS2" || s == "IIFS_MinI") return System::IIFS_MinI;
  throw UsageError("unknown operator system '" + std::string(s) + "'");
}

/// Which triple is rescaled when an IIFS_MaxI conjunction overflows.
/// Both divide by the overflowing sum of the operator output; they differ in
/// the indeterminacy numerator:
///   Result     - the output's own (max) indeterminacy, so the sum becomes 1;
///   LesserI    - the smaller operand indeterminacy, which reproduces the
///                values of the counterexample1 exhibit (0.495, 0.109, 0.326).
enum class OverflowNumerator { Result, LesserI };

struct OperatorSystem {
  System system = System::NS;
  NormPair norms{};
  OverflowNumerator overflow = OverflowNumerator::Result;

  static OperatorSystem ns(NormPair n = {}) { return {System::NS, n}; }
  static OperatorSystem ifs(NormPair n = {}) { return {System::IFS, n}; }
  static OperatorSystem iifs_max_i(
      OverflowNumerator o = OverflowNumerator::Result, NormPair n = {}) {
    return {System::IIFS_MaxI, n, o};
  }
  static OperatorSystem iifs_min_i(NormPair n = {}) {
    return {System::IIFS_MinI, n};
  }

  FamilySpec family() const {
    switch (system) {
      case System::IFS: return FamilySpec::ifs();
      case System::NS: return FamilySpec::ns();
      default: return FamilySpec::iifs();
    }
  }
};

namespace detail {

inline void require_operand(const Triplet& x, const OperatorSystem& sys) {
  auto r = validate(x, sys.family());
  if (!r.valid) {
    throw ConstraintError("operand " + format_real(x.t) + ", " +
                          format_real(x.i) + ", " + format_real(x.f) +
                          " invalid for " + std::string(to_string(sys.system)) +
                          ": " + r.diagnostics);
  }
}

inline Triplet ifs_from_tf(double t, double f) {
  return Triplet(t, std::clamp(1.0 - t - f, 0.0, 1.0), f);
}

}  // namespace detail

inline Triplet negate(const Triplet& a, const OperatorSystem& sys = {}) {
  detail::require_operand(a, sys);
  if (sys.system == System::NS) return Triplet(a.f, UnitValue(1.0 - a.i), a.t);
  return Triplet(a.f, a.i, a.t);
}

inline Triplet conjunct(const Triplet& a, const Triplet& b,
                        const OperatorSystem& sys = {}) {
  detail::require_operand(a, sys);
  detail::require_operand(b, sys);
  const auto& n = sys.norms;
  const double t = n.t(a.t, b.t);
  const double f = n.s(a.f, b.f);
  switch (sys.system) {
    case System::IFS:
      return detail::ifs_from_tf(t, f);
    case System::NS:
      return Triplet(t, n.s(a.i, b.i), f);
    case System::IIFS_MinI:
      return Triplet(t, n.t(a.i, b.i), f);
    case System::IIFS_MaxI: {
      const double i = n.s(a.i, b.i);
      const double sum = t + i + f;
      if (sum <= 1.0 + kEpsilon) return Triplet(t, i, f);
      const double i_num =
          sys.overflow == OverflowNumerator::Result ? i : n.t(a.i, b.i);
      return Triplet(t / sum, i_num / sum, f / sum);
    }
  }
  return {};
}

inline Triplet disjunct(const Triplet& a, const Triplet& b,
                        const OperatorSystem& sys = {}) {
  detail::require_operand(a, sys);
  detail::require_operand(b, sys);
  const auto& n = sys.norms;
  const double t = n.s(a.t, b.t);
  const double f = n.t(a.f, b.f);
  if (sys.system == System::IFS) return detail::ifs_from_tf(t, f);
  return Triplet(t, n.t(a.i, b.i), f);
}

/// a -> b as (not a) or b.
inline Triplet implicate(const Triplet& a, const Triplet& b,
                         const OperatorSystem& sys = {}) {
  return disjunct(negate(a, sys), b, sys);
}

enum class SetOp { And, Or, Implies, Not };

inline SetOp parse_set_op(std::string_view s) {
  if (s == "and") return SetOp::And;
  if (s == "or") return SetOp::Or;
  if (s == "implies") return SetOp::Implies;
  if (s == "not") return SetOp::Not;
  throw UsageError("unknown operator '" + std::string(s) + "'");
}

inline Triplet apply(SetOp op, const Triplet& a, const Triplet& b,
                     const OperatorSystem& sys) {
  switch (op) {
    case SetOp::And: return conjunct(a, b, sys);
    case SetOp::Or: return disjunct(a, b, sys);
    case SetOp::Implies: return implicate(a, b, sys);
    case SetOp::Not: return negate(a, sys);
  }
  return {};
}

}  // namespace neutro
