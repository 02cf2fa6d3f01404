#include <gtest/gtest.h>

#include "neutro/transforms.hpp"

namespace neutro {
namespace {

TEST(SupTransform, TwoElementSet) {
  const LabeledSet c({"x1", "x2"},
                     {Triplet(0.2, 0.3, 0.5), Triplet(0.6, 0.2, 0.6)});
  const auto r = sup_transform(c);
  // Suprema 0.6 + 0.3 + 0.6.
  EXPECT_NEAR(r.denominator, 1.5, kEpsilon);
  EXPECT_NEAR(r.set[0].t, 0.2 / 1.5, kEpsilon);
  EXPECT_NEAR(r.set[1].f, 0.6 / 1.5, kEpsilon);
  EXPECT_NEAR(r.refusals[0], 1.0 - 1.0 / 1.5, kEpsilon);
  EXPECT_EQ(r.set.family().kind(), FamilyKind::IIFS);
}

TEST(SupTransform, SingleSumOneElementUnchanged) {
  const LabeledSet s({"x"}, {Triplet(0.2, 0.3, 0.5)});
  const auto r = sup_transform(s);
  EXPECT_NEAR(r.set[0].t, 0.2, kEpsilon);
  EXPECT_NEAR(r.set[0].i, 0.3, kEpsilon);
  EXPECT_NEAR(r.set[0].f, 0.5, kEpsilon);
  EXPECT_NEAR(r.refusals[0], 0.0, kEpsilon);
}

TEST(SupTransform, AllZeroIsDegenerate) {
  const LabeledSet z({"x", "y"}, {Triplet(0, 0, 0), Triplet(0, 0, 0)});
  EXPECT_THROW(sup_transform(z), DegenerateInputError);
}

TEST(Normalize, Basics) {
  const Triplet third(1.0 / 3, 1.0 / 3, 1.0 / 3);
  EXPECT_EQ(normalize(third), third);
  const Triplet x = normalize(Triplet(0.8, 0.3, 0.5));
  EXPECT_NEAR(x.t, 0.5, kEpsilon);
  EXPECT_NEAR(x.sum(), 1.0, kEpsilon);
  EXPECT_THROW(normalize(Triplet(0, 0, 0)), DegenerateInputError);
}

TEST(Normalize, NamesTheZeroElement) {
  const LabeledSet s({"ok", "bad"}, {Triplet(0.1, 0, 0), Triplet(0, 0, 0)});
  try {
    normalize_elementwise(s);
    FAIL() << "expected DegenerateInputError";
  } catch (const DegenerateInputError& e) {
    EXPECT_NE(std::string(e.what()).find("'bad'"), std::string::npos);
  }
}

TEST(Paradox, CollapsesToEqualThirds) {
  const auto r = paradox_check(Triplet(1, 1, 1));
  EXPECT_TRUE(r.is_paradox);
  EXPECT_TRUE(r.ns_valid);
  EXPECT_FALSE(r.iifs_valid);
  ASSERT_TRUE(r.normalized.has_value());
  EXPECT_EQ(r.normalized->t.value(), 1.0 / 3);
  EXPECT_FALSE(r.normalized_is_paradox);

  const auto z = paradox_check(Triplet(0, 0, 0));
  EXPECT_FALSE(z.is_paradox);
  EXPECT_FALSE(z.normalized.has_value());
}

TEST(Divergence, SelfAndOther) {
  const LabeledSet a({"x1", "x2"},
                     {Triplet(0.3, 0.6, 0.1), Triplet(0.4, 0.1, 0.5)});
  const auto same = divergence_report(a, a);
  EXPECT_FALSE(same.differ);
  EXPECT_EQ(same.max_abs_delta, 0.0);

  const LabeledSet b({"x1", "x2"},
                     {Triplet(0.3, 0.4, 0.1), Triplet(0.4, 0.1, 0.5)});
  const auto d = divergence_report(a, b);
  EXPECT_TRUE(d.differ);
  EXPECT_NEAR(d.max_abs_delta, 0.2, kEpsilon);
  EXPECT_NEAR(d.deltas[0][1], 0.2, kEpsilon);
  EXPECT_FALSE(divergence_report(a, b, 0.5).differ);
}

}  // namespace
}  // namespace neutro
