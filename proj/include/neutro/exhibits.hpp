#pragma once

// Worked examples recomputed from scratch and diffed against their published
// values. Each exhibit returns named checks; the CLI prints them and the
// acceptance suite asserts on them.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neutro/decision.hpp"
#include "neutro/indeterminacy.hpp"
#include "neutro/transforms.hpp"
#include "neutro/volume.hpp"

namespace neutro::exhibits {

struct Check {
  std::string name;
  std::vector<double> expected;
  std::vector<double> actual;
  double tolerance = 0.0;
  bool passed = false;
};

struct ExhibitResult {
  std::string name;
  std::string title;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return !checks.empty();
  }
};

struct Options {
  double tolerance = kPrintedTolerance;  // for values printed to 2 decimals
  std::uint64_t seed = 42;
  std::uint64_t samples = 100000;
};

namespace detail {

using Rows = std::vector<std::array<double, 3>>;

class Recorder {
 public:
  explicit Recorder(ExhibitResult& r) : r_(r) {}

  void values(std::string name, std::vector<double> expected,
              std::vector<double> actual, double tol) {
    bool ok = expected.size() == actual.size();
    for (std::size_t k = 0; ok && k < expected.size(); ++k) {
      ok = std::fabs(expected[k] - actual[k]) <= tol;
    }
    r_.checks.push_back(
        {std::move(name), std::move(expected), std::move(actual), tol, ok});
  }

  void scalar(std::string name, double expected, double actual, double tol) {
    values(std::move(name), {expected}, {actual}, tol);
  }

  void triplet(std::string name, const std::array<double, 3>& expected,
               const Triplet& actual, double tol) {
    values(std::move(name), {expected.begin(), expected.end()},
           {actual.t, actual.i, actual.f}, tol);
  }

  void set(const std::string& name, const Rows& expected, const LabeledSet& s,
           double tol) {
    for (std::size_t k = 0; k < expected.size(); ++k) {
      triplet(name + " " + s.name(k), expected[k], s.at(k), tol);
    }
  }

  // Boolean verdicts are stored as 1/0 and must match exactly.
  void flag(std::string name, bool expected, bool actual) {
    values(std::move(name), {expected ? 1.0 : 0.0}, {actual ? 1.0 : 0.0}, 0.0);
  }

 private:
  ExhibitResult& r_;
};

inline LabeledSet set_a_n() {
  return LabeledSet({"x1", "x2"}, {{0.8, 0.3, 0.5}, {0.9, 0.2, 0.6}});
}

inline LabeledSet set_b_n() {
  return LabeledSet({"x1", "x2"}, {{0.2, 0.1, 0.3}, {0.6, 0.2, 0.1}});
}

}  // namespace detail

/// Operators on two triplets whose components already sum to 1, where the
/// intuitionistic and neutrosophic operators can still disagree.
inline ExhibitResult sum_one(const Options&) {
  ExhibitResult r{"sum-one", "IFS vs NS operators on sum-1 operands", {}};
  detail::Recorder rec(r);
  const double tol = kEpsilon;  // exact decimals
  const Triplet a1(0.3, 0.6, 0.1), a2(0.4, 0.1, 0.5);
  const auto ifs = OperatorSystem::ifs();
  const auto ns = OperatorSystem::ns();

  rec.triplet("IFS not A1", {0.1, 0.6, 0.3}, negate(a1, ifs), tol);
  rec.triplet("IFS not A2", {0.5, 0.1, 0.4}, negate(a2, ifs), tol);
  rec.triplet("NS not A1", {0.1, 0.4, 0.3}, negate(a1, ns), tol);
  rec.triplet("NS not A2", {0.5, 0.9, 0.4}, negate(a2, ns), tol);
  rec.triplet("IFS A1 and A2", {0.3, 0.2, 0.5}, conjunct(a1, a2, ifs), tol);
  rec.triplet("NS A1 and A2", {0.3, 0.6, 0.5}, conjunct(a1, a2, ns), tol);
  rec.triplet("IFS A1 or A2", {0.4, 0.5, 0.1}, disjunct(a1, a2, ifs), tol);
  rec.triplet("NS A1 or A2", {0.4, 0.1, 0.1}, disjunct(a1, a2, ns), tol);
  rec.triplet("IFS A1 implies A2", {0.4, 0.3, 0.3}, implicate(a1, a2, ifs),
              tol);
  rec.triplet("NS A1 implies A2", {0.4, 0.1, 0.3}, implicate(a1, a2, ns), tol);
  return r;
}

/// Neutrosophic sets with component sums above and below 1, pushed through
/// the sup transform and combined in both orders (transform then operate,
/// operate then transform).
inline ExhibitResult counterexample1(const Options& o) {
  ExhibitResult r{"counterexample1",
                  "sup transform and operators do not commute", {}};
  detail::Recorder rec(r);
  const double tol = o.tolerance;
  const auto a_n = detail::set_a_n(), b_n = detail::set_b_n();

  const auto at = sup_transform(a_n);
  const auto bt = sup_transform(b_n);
  rec.scalar("sup sum A_N", 1.8, at.denominator, kEpsilon);
  rec.scalar("sup sum B_N", 1.1, bt.denominator, kEpsilon);
  rec.set("A_IIFS", {{0.44, 0.17, 0.28}, {0.50, 0.11, 0.33}}, at.set, tol);
  rec.values("A_IIFS refusal", {0.11, 0.06}, at.refusals, tol);
  rec.set("B_IIFS", {{0.18, 0.09, 0.27}, {0.55, 0.18, 0.09}}, bt.set, tol);
  rec.values("B_IIFS refusal", {0.46, 0.18}, bt.refusals, tol);

  const auto ns = OperatorSystem::ns();
  const auto c_n = setwise(a_n, b_n, SetOp::And, ns);
  const auto d_n = setwise(a_n, b_n, SetOp::Or, ns);
  rec.set("C_N", {{0.2, 0.3, 0.5}, {0.6, 0.2, 0.6}}, c_n, tol);
  rec.set("D_N", {{0.8, 0.1, 0.3}, {0.9, 0.2, 0.1}}, d_n, tol);

  const auto max_i = OperatorSystem::iifs_max_i(OverflowNumerator::LesserI);
  const auto c_iifs = setwise(at.set, bt.set, SetOp::And, max_i);
  const auto c_iifs2 =
      setwise(at.set, bt.set, SetOp::And, OperatorSystem::iifs_min_i());
  const auto d_iifs = setwise(at.set, bt.set, SetOp::Or, max_i);
  rec.set("C_IIFS", {{0.18, 0.17, 0.28}, {0.495, 0.109, 0.326}}, c_iifs, tol);
  rec.set("C_IIFS2", {{0.18, 0.09, 0.28}, {0.50, 0.11, 0.33}}, c_iifs2, tol);
  rec.set("D_IIFS", {{0.44, 0.09, 0.27}, {0.55, 0.11, 0.09}}, d_iifs, tol);

  const auto ct = sup_transform(c_n);
  const auto dt = sup_transform(d_n);
  rec.scalar("sup sum C_N", 1.5, ct.denominator, kEpsilon);
  rec.scalar("sup sum D_N", 1.4, dt.denominator, kEpsilon);
  rec.set("C_IIFS^(t)", {{0.13, 0.20, 0.33}, {0.40, 0.13, 0.40}}, ct.set,
          tol);
  rec.set("D_IIFS^(t)", {{0.57, 0.07, 0.21}, {0.64, 0.14, 0.07}}, dt.set,
          tol);

  rec.flag("C_N differs from C_IIFS", true,
           divergence_report(c_n, c_iifs, tol).differ);
  rec.flag("D_N differs from D_IIFS", true,
           divergence_report(d_n, d_iifs, tol).differ);
  rec.flag("C_IIFS^(t) differs from C_IIFS", true,
           divergence_report(ct.set, c_iifs, tol).differ);
  return r;
}

/// Element-wise normalization to sum 1, followed by IFS and NS operators
/// that still disagree on the same normalized operands.
inline ExhibitResult counterexample2(const Options& o) {
  ExhibitResult r{"counterexample2",
                  "normalized sets still separate IFS from NS operators", {}};
  detail::Recorder rec(r);
  const double tol = o.tolerance;
  const auto a = normalize_elementwise(detail::set_a_n());
  const auto b = normalize_elementwise(detail::set_b_n());
  rec.set("A_IFS", {{0.50, 0.19, 0.31}, {0.53, 0.12, 0.35}}, a, tol);
  rec.set("B_IFS", {{0.33, 0.17, 0.50}, {0.67, 0.22, 0.11}}, b, tol);

  const auto ifs = OperatorSystem::ifs();
  const auto ns = OperatorSystem::ns();
  rec.set("A_IFS and B_IFS (IFS)", {{0.33, 0.17, 0.50}, {0.53, 0.12, 0.35}},
          setwise(a, b, SetOp::And, ifs), tol);
  rec.set("A_IFS or B_IFS (IFS)", {{0.50, 0.19, 0.31}, {0.67, 0.22, 0.11}},
          setwise(a, b, SetOp::Or, ifs), tol);

  const Triplet ns_and = conjunct(a[0], b[0], ns);
  const Triplet ifs_and = conjunct(a[0], b[0], ifs);
  const Triplet ns_or = disjunct(a[0], b[0], ns);
  const Triplet ifs_or = disjunct(a[0], b[0], ifs);
  rec.triplet("x1 and (NS)", {0.33, 0.19, 0.50}, ns_and, tol);
  rec.triplet("x1 and (IFS)", {0.33, 0.17, 0.50}, ifs_and, tol);
  rec.triplet("x1 or (NS)", {0.50, 0.17, 0.31}, ns_or, tol);
  rec.triplet("x1 or (IFS)", {0.50, 0.19, 0.31}, ifs_or, tol);
  rec.flag("x1 and: NS differs from IFS", true,
           !approx_equal(ns_and, ifs_and, kEpsilon));
  rec.flag("x1 or: NS differs from IFS", true,
           !approx_equal(ns_or, ifs_or, kEpsilon));
  return r;
}

/// Pythagorean constraint ties F to T; NS leaves it free.
inline ExhibitResult counterexample3(const Options& o) {
  ExhibitResult r{"counterexample3", "PyFS components are dependent", {}};
  detail::Recorder rec(r);
  const auto pyfs = FamilySpec::pyfs();
  const double f_max = std::sqrt(1.0 - 0.9 * 0.9);
  rec.scalar("largest F for T = 0.9", 0.44, f_max, o.tolerance);
  rec.flag("PyFS accepts (0.9, F max)", true, is_valid(Pair(0.9, f_max), pyfs));
  rec.flag("PyFS accepts (0.9, 1)", false, is_valid(Pair(0.9, 1.0), pyfs));
  rec.flag("NS accepts (0.9, 0.5, 1)", true,
           is_valid(Triplet(0.9, 0.5, 1.0), FamilySpec::ns()));
  rec.scalar("hesitancy of (0.9, 0.2)", 0.39,
             hesitancy(Pair(0.9, 0.2), pyfs), o.tolerance);
  const Triplet e = embed_into_ns(Pair(0.9, 0.2), pyfs);
  rec.scalar("embedded component sum", 1.0, e.sum(), kEpsilon);
  return r;
}

/// Squared components summing past 1.
inline ExhibitResult counterexample4(const Options&) {
  ExhibitResult r{"counterexample4", "T = 0.9 rules out F = 0.8", {}};
  detail::Recorder rec(r);
  const auto rep = validate(Pair(0.9, 0.8), FamilySpec::pyfs());
  rec.scalar("0.9^2 + 0.8^2", 1.45, rep.constraint_value, kEpsilon);
  rec.flag("PyFS accepts (0.9, 0.8)", false, rep.valid);
  rec.flag("NS accepts (0.9, 0, 0.8)", true,
           is_valid(Triplet(0.9, 0.0, 0.8), FamilySpec::ns()));
  return r;
}

/// A neutrosophic triplet outside the spherical octant.
inline ExhibitResult counterexample5(const Options&) {
  ExhibitResult r{"counterexample5", "(0.9, 0.4, 0.5) is NS but not SFS", {}};
  detail::Recorder rec(r);
  const Triplet w = find_counterexample(StrictnessClaim::NsNotSfs);
  rec.triplet("witness", {0.9, 0.4, 0.5}, w, 0.0);
  const auto sfs = validate(w, FamilySpec::sfs());
  rec.scalar("sum of squares", 1.22, sfs.constraint_value, kEpsilon);
  rec.flag("SFS accepts witness", false, sfs.valid);
  rec.flag("NS accepts witness", true, is_valid(w, FamilySpec::ns()));
  rec.flag("witness lies in the paraconsistent region", true,
           classify_cube_region(w) == CubeRegion::Paraconsistent);
  return r;
}

/// Full truth with any falsehood breaks every q-rung orthopair bound.
inline ExhibitResult counterexample6(const Options&) {
  ExhibitResult r{"counterexample6", "(1, F > 0) is NS but not q-ROFS", {}};
  detail::Recorder rec(r);
  for (double q : {1.0, 2.0, 5.0}) {
    const auto fam = FamilySpec::qrofs(q);
    const std::string tag = "q = " + ::neutro::detail::format_real(q);
    rec.flag(tag + ": q-ROFS accepts (1, 0.3)", false,
             is_valid(Pair(1.0, 0.3), fam));
    rec.flag(tag + ": q-ROFS accepts (0.3, 1)", false,
             is_valid(Pair(0.3, 1.0), fam));
    rec.flag(tag + ": NHSFS accepts (1, 0.5, 0.5)", false,
             is_valid(Triplet(1.0, 0.5, 0.5), FamilySpec::nhsfs(q)));
  }
  rec.flag("NS accepts (1, 0.5, 0.3)", true,
           is_valid(Triplet(1.0, 0.5, 0.3), FamilySpec::ns()));
  return r;
}

/// (1, 1, 1) is representable in NS; normalizing it loses the paradox.
inline ExhibitResult paradox(const Options&) {
  ExhibitResult r{"paradox", "paradox triplet vs its normalization", {}};
  detail::Recorder rec(r);
  const auto p = paradox_check(Triplet(1.0, 1.0, 1.0));
  rec.flag("NS accepts (1, 1, 1)", true, p.ns_valid);
  rec.flag("IIFS accepts (1, 1, 1)", false, p.iifs_valid);
  rec.triplet("normalized", {1.0 / 3, 1.0 / 3, 1.0 / 3}, *p.normalized, 0.0);
  rec.flag("normalized is still a paradox", false, p.normalized_is_paradox);
  return r;
}

/// Territory shares of a country turned into (T, I, F).
inline ExhibitResult neutrosophication(const Options&) {
  ExhibitResult r{"neutrosophication", "country M by temperature zone", {}};
  detail::Recorder rec(r);
  const std::vector<LabeledArea> areas{
      {"cold", 30.0}, {"medium", 20.0}, {"hot", 50.0}};
  const auto m = neutrosophify(areas, {{"cold"}, {"medium"}, {"hot"}});
  rec.triplet("M", {0.3, 0.2, 0.5}, m.as_triplet(), kEpsilon);
  rec.flag("M sums to 1", true, m.dependence == Dependence::SumToOne);
  const std::vector<LabeledArea> all_cold{{"cold", 1.0}};
  const auto c = neutrosophify(all_cold, {{"cold"}, {}, {}});
  rec.triplet("all cold", {1.0, 0.0, 0.0}, c.as_triplet(), 0.0);
  return r;
}

/// Membership degrees of employees measured in hours against a 40-hour week.
inline ExhibitResult offset(const Options&) {
  ExhibitResult r{"offset", "worked hours as off-set membership", {}};
  detail::Recorder rec(r);
  const std::vector<std::pair<std::string, double>> staff{
      {"Helen", 30.0}, {"John", 40.0}, {"George", 45.0},
      {"Jane", 0.0},   {"Richard", -20.0}};
  const std::vector<double> printed{0.75, 1.0, 1.125, 0.0, -0.5};
  std::vector<double> degrees;
  for (const auto& [who, hours] : staff) {
    degrees.push_back(offset_degree(hours, 40.0));
  }
  rec.values("degrees", printed, degrees, 0.0);
  const OffsetBounds bounds(-1.0, 2.0);
  rec.flag("George is overset", true,
           validate_offset({degrees[2], 0.0, 0.0}, bounds).cls ==
               OffsetClass::Overset);
  rec.flag("Richard is underset", true,
           validate_offset({degrees[4], 0.0, 0.0}, bounds).cls ==
               OffsetClass::Underset);
  rec.flag("Helen is standard", true,
           validate_offset({degrees[0], 0.0, 0.0}, bounds).cls ==
               OffsetClass::Standard);
  return r;
}

inline constexpr std::string_view kGraphGrid =
    "0 1 I 0 I\n"
    "1 0 I 0 0\n"
    "I I 0 1 1\n"
    "0 0 1 0 1\n"
    "I 0 1 1 0\n";

inline constexpr std::string_view kCognitiveMapGrid =
    "0 I -1 1 1 0 0\n"
    "I 0 I 0 0 0 0\n"
    "-1 I 0 0 I 0 0\n"
    "1 0 0 0 0 0 0\n"
    "1 0 0 0 0 0 0\n"
    "0 0 0 0 I 0 -1\n"
    "-1 0 0 0 0 0 0\n";

/// Adjacency with literal indeterminacy, and the value of a two-edge path.
inline ExhibitResult graphs(const Options&) {
  ExhibitResult r{"graphs", "neutrosophic graph and cognitive map", {}};
  detail::Recorder rec(r);
  const auto g = parse_grid(kGraphGrid);
  const auto gr = adjacency_validate(g, AdjacencyKind::Graph);
  rec.scalar("graph indeterminate entries", 6.0,
             static_cast<double>(gr.indeterminate), 0.0);
  rec.scalar("graph indeterminate pairs", 3.0,
             static_cast<double>(gr.symmetric_indeterminate_pairs), 0.0);
  rec.flag("graph grid round-trips", true, emit_grid(g) == kGraphGrid);

  const auto m = parse_grid(kCognitiveMapGrid);
  const auto mr = adjacency_validate(m, AdjacencyKind::CognitiveMap);
  rec.scalar("cognitive map size", 7.0, static_cast<double>(mr.size), 0.0);
  rec.flag("cognitive map grid round-trips", true,
           emit_grid(m) == kCognitiveMapGrid);

  const std::array<Triplet, 2> path{Triplet(0.3, 0.6, 0.1),
                                    Triplet(0.4, 0.1, 0.5)};
  rec.triplet("path A -> B -> C", {0.3, 0.6, 0.5}, path_influence(path),
              kEpsilon);
  return r;
}

/// Share of the unit cube occupied by the spherical and 1-hyperspherical
/// families, sampled and compared with the closed forms.
inline ExhibitResult geometry(const Options& o) {
  ExhibitResult r{"geometry", "octant vs cube volumes", {}};
  detail::Recorder rec(r);
  auto sampled = [&](const FamilySpec& fam, double exact,
                     const std::string& label) {
    const auto e = estimate_family_volume(fam, o.samples, o.seed);
    rec.scalar(label + " volume within 3 sigma", exact, e.estimate,
               3.0 * e.std_error);
    const auto again = estimate_family_volume(fam, o.samples, o.seed);
    rec.flag(label + " estimate reproducible", true,
             again.estimate == e.estimate);
  };
  sampled(FamilySpec::sfs(), std::numbers::pi / 6.0, "SFS");
  sampled(FamilySpec::nhsfs(1.0), 1.0 / 6.0, "NHSFS(1)");
  rec.scalar("NS volume", 1.0, *analytic_family_volume(FamilySpec::ns()), 0.0);
  return r;
}

using ExhibitFn = ExhibitResult (*)(const Options&);

inline const std::vector<std::pair<std::string_view, ExhibitFn>>& registry() {
  static const std::vector<std::pair<std::string_view, ExhibitFn>> all{
      {"sum-one", sum_one},
      {"counterexample1", counterexample1},
      {"counterexample2", counterexample2},
      {"counterexample3", counterexample3},
      {"counterexample4", counterexample4},
      {"counterexample5", counterexample5},
      {"counterexample6", counterexample6},
      {"paradox", paradox},
      {"neutrosophication", neutrosophication},
      {"offset", offset},
      {"graphs", graphs},
      {"geometry", geometry},
  };
  return all;
}

inline std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.emplace_back(name);
  return out;
}

inline ExhibitResult run(std::string_view name, const Options& o = {}) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(o);
  }
  throw UsageError("unknown exhibit '" + std::string(name) + "'");
}

}  // namespace neutro::exhibits
