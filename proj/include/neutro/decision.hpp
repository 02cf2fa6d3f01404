#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "neutro/refined.hpp"

namespace neutro {

enum class Dependence { SumToOne, Free };

/// Fractions of a universe that are accepted, left noncommitted and rejected.
struct Partition3 {
  UnitValue accept;
  UnitValue noncommit;
  UnitValue reject;
  Dependence dependence = Dependence::SumToOne;

  Partition3() = default;
  Partition3(double a, double n, double r, Dependence d)
      : accept(a), noncommit(n), reject(r), dependence(d) {
    const double sum = a + n + r;
    if (d == Dependence::SumToOne && !approx_equal(sum, 1.0)) {
      throw ConstraintError("partition fractions sum to " +
                            detail::format_real(sum) + ", not 1");
    }
  }

  Triplet as_triplet() const { return {accept, noncommit, reject}; }
};

struct LabeledArea {
  std::string label;
  double size = 0.0;
};

/// Which area labels count towards <A>, <neutA> and <antiA>.
struct LabelMapping {
  std::vector<std::string> a;
  std::vector<std::string> neut_a;
  std::vector<std::string> anti_a;
};

/// Converts a crisp description of a universe (areas and the concept each
/// one expresses) into (T, I, F) fractions. SumToOne when every area is
/// assigned to one of the three groups, Free otherwise.
inline Partition3 neutrosophify(std::span<const LabeledArea> areas,
                                const LabelMapping& mapping) {
  std::unordered_map<std::string, int> group;
  auto assign = [&](const std::vector<std::string>& labels, int g) {
    for (const auto& l : labels) {
      if (!group.emplace(l, g).second) {
        throw UsageError("label '" + l + "' is mapped to two groups");
      }
    }
  };
  assign(mapping.a, 0);
  assign(mapping.neut_a, 1);
  assign(mapping.anti_a, 2);

  std::array<double, 3> sums{};
  double total = 0.0;
  bool covered = true;
  std::unordered_map<std::string, bool> present;
  for (const auto& area : areas) {
    if (!(area.size >= 0.0 && std::isfinite(area.size))) {
      throw UsageError("area '" + area.label + "' has size " +
                       detail::format_real(area.size));
    }
    total += area.size;
    present[area.label] = true;
    auto it = group.find(area.label);
    if (it == group.end()) {
      covered = false;
    } else {
      sums[static_cast<std::size_t>(it->second)] += area.size;
    }
  }
  for (const auto& [label, g] : group) {
    if (!present.count(label)) {
      throw UsageError("mapped label '" + label + "' names no area");
    }
  }
  if (!(total > 0.0)) {
    throw DegenerateInputError("neutrosophication: total area is zero");
  }
  return Partition3(sums[0] / total, sums[1] / total, sums[2] / total,
                    covered ? Dependence::SumToOne : Dependence::Free);
}

enum class Verdict { Accept, Noncommit, Reject };

inline constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Accept: return "accept";
    case Verdict::Noncommit: return "noncommit";
    case Verdict::Reject: return "reject";
  }
  return "?";
}

struct ThreeWayResult {
  std::vector<Verdict> labels;
  Partition3 partition;
};

namespace detail {

inline void require_scores(std::span<const double> scores) {
  if (scores.empty()) throw DegenerateInputError("no scores to partition");
  for (double s : scores) {
    if (std::isnan(s)) throw UsageError("score is NaN");
  }
}

}  // namespace detail

/// score >= alpha accepts, score <= beta rejects, anything between is left
/// noncommitted.
inline ThreeWayResult three_ways(std::span<const double> scores, double alpha,
                                 double beta) {
  if (!(alpha > beta)) {
    throw UsageError("three-way thresholds need alpha > beta, got alpha = " +
                     detail::format_real(alpha) +
                     ", beta = " + detail::format_real(beta));
  }
  detail::require_scores(scores);
  ThreeWayResult r;
  r.labels.reserve(scores.size());
  std::array<std::size_t, 3> counts{};
  for (double s : scores) {
    const Verdict v = s >= alpha  ? Verdict::Accept
                      : s <= beta ? Verdict::Reject
                                  : Verdict::Noncommit;
    ++counts[static_cast<std::size_t>(v)];
    r.labels.push_back(v);
  }
  const double n = static_cast<double>(scores.size());
  r.partition = Partition3(static_cast<double>(counts[0]) / n,
                           static_cast<double>(counts[1]) / n,
                           static_cast<double>(counts[2]) / n,
                           Dependence::SumToOne);
  return r;
}

/// One graded band. Level 1 is the most extreme band of its region: the top
/// accept band, the bottom reject band, and the noncommit band nearest to
/// acceptance.
struct BandLabel {
  Verdict region = Verdict::Noncommit;
  std::size_t level = 1;

  friend bool operator==(const BandLabel&, const BandLabel&) = default;
};

inline std::string level_name(std::size_t level) {
  switch (level) {
    case 1: return "very high";
    case 2: return "high";
    case 3: return "medium";
    default: return "level " + std::to_string(level);
  }
}

inline std::string to_string(const BandLabel& b) {
  return level_name(b.level) + " " + std::string(to_string(b.region));
}

struct PartitionN {
  std::vector<double> accept_levels;     // p fractions, level 1 first
  std::vector<double> noncommit_levels;  // r
  std::vector<double> reject_levels;     // s
};

struct NWayResult {
  std::vector<BandLabel> labels;
  PartitionN partition;
};

/// Splits the score axis into s reject bands (lowest), r noncommit bands and
/// p accept bands (highest) at p + r + s - 1 ascending cuts. A score equal to
/// one of the lowest s cuts stays in the band below; equal to any other cut,
/// it moves up. With that rule the region boundaries behave exactly like
/// three_ways(cuts[s + r - 1], cuts[s - 1]).
inline NWayResult n_ways(std::span<const double> scores,
                         std::span<const double> cuts, Arities arity) {
  const std::size_t p = arity.p, r = arity.r, s = arity.s;
  if (p < 1 || r < 1 || s < 1 || p + r + s < 4) {
    throw UsageError("n-ways decision needs p, r, s >= 1 and p + r + s >= 4");
  }
  const std::size_t n = p + r + s;
  if (cuts.size() != n - 1) {
    throw UsageError("n-ways decision with " + std::to_string(n) +
                     " bands needs " + std::to_string(n - 1) +
                     " cut points, got " + std::to_string(cuts.size()));
  }
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    if (!std::isfinite(cuts[k]) || (k > 0 && !(cuts[k] > cuts[k - 1]))) {
      throw UsageError("cut points must be finite and strictly ascending");
    }
  }
  detail::require_scores(scores);

  NWayResult out;
  out.partition.accept_levels.assign(p, 0.0);
  out.partition.noncommit_levels.assign(r, 0.0);
  out.partition.reject_levels.assign(s, 0.0);
  std::vector<std::size_t> counts(n, 0);
  for (double x : scores) {
    std::size_t band = 0;
    while (band < cuts.size() &&
           (band < s ? x > cuts[band] : x >= cuts[band])) {
      ++band;
    }
    ++counts[band];
    BandLabel b;
    if (band < s) {
      b = {Verdict::Reject, band + 1};
    } else if (band < s + r) {
      b = {Verdict::Noncommit, s + r - band};
    } else {
      b = {Verdict::Accept, n - band};
    }
    out.labels.push_back(b);
  }
  const double total = static_cast<double>(scores.size());
  for (std::size_t band = 0; band < n; ++band) {
    const double frac = static_cast<double>(counts[band]) / total;
    if (band < s) {
      out.partition.reject_levels[band] = frac;
    } else if (band < s + r) {
      out.partition.noncommit_levels[s + r - band - 1] = frac;
    } else {
      out.partition.accept_levels[n - band - 1] = frac;
    }
  }
  return out;
}

/// Membership as a share of a norm, deliberately allowed outside [0, 1]:
/// 45 worked hours against a 40-hour week is 1.125.
inline double offset_degree(double amount, double norm) {
  if (!(norm > 0.0)) {
    throw UsageError("offset norm must be positive, got " +
                     detail::format_real(norm));
  }
  return amount / norm;
}

/// Admissible range of off-set components.
struct OffsetBounds {
  double under = 0.0;
  double over = 1.0;

  OffsetBounds() = default;
  OffsetBounds(double u, double o) : under(u), over(o) {
    if (!(u <= 0.0) || !(o >= 1.0)) {
      throw UsageError("offset bounds need under <= 0 and over >= 1");
    }
  }
};

enum class OffsetClass { Standard, Overset, Underset, Offset };

inline constexpr std::string_view to_string(OffsetClass c) noexcept {
  switch (c) {
    case OffsetClass::Standard: return "standard";
    case OffsetClass::Overset: return "overset";
    case OffsetClass::Underset: return "underset";
    case OffsetClass::Offset: return "offset";
  }
  return "?";
}

struct OffsetReport {
  bool valid = false;  // every component within [under, over]
  OffsetClass cls = OffsetClass::Standard;
  std::string diagnostics;
};

/// Overset when some component exceeds 1, underset when some is below 0,
/// offset when both happen.
inline OffsetReport validate_offset(const std::array<double, 3>& x,
                                    const OffsetBounds& bounds) {
  OffsetReport r;
  bool above = false, below = false;
  r.valid = true;
  for (double v : x) {
    if (std::isnan(v) || v < bounds.under || v > bounds.over) {
      r.valid = false;
      r.diagnostics = "component " + detail::format_real(v) + " outside [" +
                      detail::format_real(bounds.under) + ", " +
                      detail::format_real(bounds.over) + "]";
    }
    above = above || v > 1.0;
    below = below || v < 0.0;
  }
  r.cls = above && below ? OffsetClass::Offset
          : above        ? OffsetClass::Overset
          : below        ? OffsetClass::Underset
                         : OffsetClass::Standard;
  if (r.valid) r.diagnostics = std::string(to_string(r.cls));
  return r;
}

}  // namespace neutro
