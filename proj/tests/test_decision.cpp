#include <gtest/gtest.h>

#include <vector>

#include "neutro/decision.hpp"

namespace neutro {
namespace {

TEST(Neutrosophify, CountryM) {
  const std::vector<LabeledArea> areas{
      {"cold", 30.0}, {"medium", 20.0}, {"hot", 50.0}};
  const auto m = neutrosophify(areas, {{"cold"}, {"medium"}, {"hot"}});
  EXPECT_NEAR(m.accept, 0.3, kEpsilon);
  EXPECT_NEAR(m.noncommit, 0.2, kEpsilon);
  EXPECT_NEAR(m.reject, 0.5, kEpsilon);
  EXPECT_EQ(m.dependence, Dependence::SumToOne);
}

TEST(Neutrosophify, SingleLabelAndThirds) {
  const std::vector<LabeledArea> one{{"a", 7.0}};
  EXPECT_EQ(neutrosophify(one, {{"a"}, {}, {}}).as_triplet(),
            Triplet(1.0, 0.0, 0.0));
  const std::vector<LabeledArea> thirds{{"a", 1.0}, {"n", 1.0}, {"r", 1.0}};
  const auto t = neutrosophify(thirds, {{"a"}, {"n"}, {"r"}});
  EXPECT_EQ(t.accept.value(), 1.0 / 3);
  EXPECT_EQ(t.reject.value(), 1.0 / 3);
}

TEST(Neutrosophify, GroupsOfSeveralLabelsAndUncovered) {
  const std::vector<LabeledArea> areas{
      {"a1", 1.0}, {"a2", 2.0}, {"n", 3.0}, {"other", 4.0}};
  const auto p = neutrosophify(areas, {{"a1", "a2"}, {"n"}, {}});
  EXPECT_NEAR(p.accept, 0.3, kEpsilon);
  EXPECT_NEAR(p.noncommit, 0.3, kEpsilon);
  EXPECT_EQ(p.reject.value(), 0.0);
  EXPECT_EQ(p.dependence, Dependence::Free);
}

TEST(Neutrosophify, Errors) {
  const std::vector<LabeledArea> zero{{"a", 0.0}, {"b", 0.0}};
  EXPECT_THROW(neutrosophify(zero, {{"a"}, {"b"}, {}}), DegenerateInputError);
  const std::vector<LabeledArea> neg{{"a", -1.0}};
  EXPECT_THROW(neutrosophify(neg, {{"a"}, {}, {}}), UsageError);
  const std::vector<LabeledArea> ok{{"a", 1.0}};
  EXPECT_THROW(neutrosophify(ok, {{"a"}, {"a"}, {}}), UsageError);
  EXPECT_THROW(neutrosophify(ok, {{"a"}, {"ghost"}, {}}), UsageError);
}

TEST(Partition3, SumToOneIsEnforced) {
  EXPECT_THROW(Partition3(0.5, 0.5, 0.5, Dependence::SumToOne),
               ConstraintError);
  EXPECT_NO_THROW(Partition3(0.5, 0.5, 0.5, Dependence::Free));
  EXPECT_THROW(Partition3(1.5, 0.0, 0.0, Dependence::Free), Error);
}

TEST(ThreeWays, Example) {
  const std::vector<double> scores{0.9, 0.5, 0.1};
  const auto r = three_ways(scores, 0.7, 0.3);
  EXPECT_EQ(r.labels, (std::vector<Verdict>{Verdict::Accept, Verdict::Noncommit,
                                            Verdict::Reject}));
  EXPECT_EQ(r.partition.accept.value(), 1.0 / 3);
  EXPECT_EQ(r.partition.noncommit.value(), 1.0 / 3);
  EXPECT_EQ(r.partition.reject.value(), 1.0 / 3);
}

TEST(ThreeWays, BoundariesAndAllAccept) {
  const std::vector<double> scores{0.7, 0.3, 0.8};
  const auto r = three_ways(scores, 0.7, 0.3);
  EXPECT_EQ(r.labels[0], Verdict::Accept);
  EXPECT_EQ(r.labels[1], Verdict::Reject);
  const std::vector<double> high{0.8, 0.95, 1.0};
  EXPECT_EQ(three_ways(high, 0.7, 0.3).partition.as_triplet(),
            Triplet(1.0, 0.0, 0.0));
  const double eps = 1e-6;
  const std::vector<double> mid{0.5, 0.5 + 2 * eps, 0.5 - 2 * eps};
  const auto m = three_ways(mid, 0.5 + eps, 0.5 - eps);
  EXPECT_EQ(m.labels, (std::vector<Verdict>{Verdict::Noncommit, Verdict::Accept,
                                            Verdict::Reject}));
}

TEST(ThreeWays, Errors) {
  const std::vector<double> scores{0.5};
  EXPECT_THROW(three_ways(scores, 0.3, 0.3), UsageError);
  EXPECT_THROW(three_ways(scores, 0.2, 0.3), UsageError);
  EXPECT_THROW(three_ways(std::span<const double>{}, 0.7, 0.3),
               DegenerateInputError);
}

TEST(NWays, TwoAcceptLevels) {
  const std::vector<double> cuts{0.25, 0.5, 0.75};
  const std::vector<double> scores{0.9, 0.8, 0.6, 0.3, 0.1};
  const auto r = n_ways(scores, cuts, Arities{2, 1, 1});
  const BandLabel top{Verdict::Accept, 1}, second{Verdict::Accept, 2};
  EXPECT_EQ(r.labels[0], top);
  EXPECT_EQ(r.labels[1], top);
  EXPECT_EQ(r.labels[2], second);
  EXPECT_EQ(r.labels[3], (BandLabel{Verdict::Noncommit, 1}));
  EXPECT_EQ(r.labels[4], (BandLabel{Verdict::Reject, 1}));
  EXPECT_EQ(r.partition.accept_levels, (std::vector<double>{0.4, 0.2}));
  EXPECT_EQ(to_string(r.labels[0]), "very high accept");
  EXPECT_EQ(to_string(r.labels[2]), "high accept");
}

TEST(NWays, TwoRejectLevels) {
  const std::vector<double> cuts{0.2, 0.4, 0.6};
  const std::vector<double> scores{0.1, 0.3, 0.5, 0.7};
  const auto r = n_ways(scores, cuts, Arities{1, 1, 2});
  EXPECT_EQ(r.labels[0], (BandLabel{Verdict::Reject, 1}));
  EXPECT_EQ(r.labels[1], (BandLabel{Verdict::Reject, 2}));
  EXPECT_EQ(r.labels[2], (BandLabel{Verdict::Noncommit, 1}));
  EXPECT_EQ(r.labels[3], (BandLabel{Verdict::Accept, 1}));
}

TEST(NWays, CutsOutsideTheUnitIntervalGiveOneBand) {
  const std::vector<double> cuts{2.0, 3.0, 4.0};
  const std::vector<double> scores{0.0, 0.5, 1.0};
  const auto r = n_ways(scores, cuts, Arities{2, 1, 1});
  EXPECT_EQ(r.partition.reject_levels, (std::vector<double>{1.0}));
}

TEST(NWays, Errors) {
  const std::vector<double> scores{0.5};
  const std::vector<double> two{0.3, 0.6};
  EXPECT_THROW(n_ways(scores, two, Arities{1, 1, 1}), UsageError);
  const std::vector<double> unsorted{0.3, 0.2, 0.6};
  EXPECT_THROW(n_ways(scores, unsorted, Arities{2, 1, 1}), UsageError);
  const std::vector<double> three{0.2, 0.4, 0.6};
  EXPECT_THROW(n_ways(scores, three, Arities{2, 2, 1}), UsageError);
  EXPECT_THROW(n_ways(scores, three, Arities{0, 2, 2}), UsageError);
}

TEST(Offset, WorkedHours) {
  EXPECT_EQ(offset_degree(45, 40), 1.125);
  EXPECT_EQ(offset_degree(-20, 40), -0.5);
  EXPECT_EQ(offset_degree(30, 40), 0.75);
  EXPECT_THROW(offset_degree(1, 0), UsageError);
  EXPECT_THROW(offset_degree(1, -40), UsageError);
}

TEST(Offset, Classification) {
  const OffsetBounds b(-1.0, 2.0);
  EXPECT_EQ(validate_offset({1.125, 0, 0}, b).cls, OffsetClass::Overset);
  EXPECT_EQ(validate_offset({-0.5, 0.2, 0.3}, b).cls, OffsetClass::Underset);
  EXPECT_EQ(validate_offset({0.3, 0.2, 0.5}, b).cls, OffsetClass::Standard);
  EXPECT_EQ(validate_offset({1.5, -0.5, 0}, b).cls, OffsetClass::Offset);
  EXPECT_TRUE(validate_offset({1.5, -0.5, 0}, b).valid);
  EXPECT_FALSE(validate_offset({2.5, 0, 0}, b).valid);
  EXPECT_TRUE(validate_offset({0.5, 0, 0}, OffsetBounds()).valid);
  EXPECT_FALSE(validate_offset({1.125, 0, 0}, OffsetBounds()).valid);
  EXPECT_THROW(OffsetBounds(0.5, 2.0), UsageError);
  EXPECT_THROW(OffsetBounds(-1.0, 0.9), UsageError);
}

}  // namespace
}  // namespace neutro
