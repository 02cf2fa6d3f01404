#include <gtest/gtest.h>

#include "neutro/labeled_set.hpp"

namespace neutro {
namespace {

void expect_triplet(const Triplet& got, double t, double i, double f,
                    double tol = kEpsilon) {
  EXPECT_NEAR(got.t, t, tol);
  EXPECT_NEAR(got.i, i, tol);
  EXPECT_NEAR(got.f, f, tol);
}

const Triplet kA1(0.3, 0.6, 0.1);
const Triplet kA2(0.4, 0.1, 0.5);

TEST(Negate, IfsKeepsIndeterminacyNsComplementsIt) {
  expect_triplet(negate(kA1, OperatorSystem::ifs()), 0.1, 0.6, 0.3);
  expect_triplet(negate(kA1, OperatorSystem::ns()), 0.1, 0.4, 0.3);
  expect_triplet(negate(kA2, OperatorSystem::ns()), 0.5, 0.9, 0.4);
}

TEST(Conjunct, SumOneOperands) {
  expect_triplet(conjunct(kA1, kA2, OperatorSystem::ifs()), 0.3, 0.2, 0.5);
  expect_triplet(conjunct(kA1, kA2, OperatorSystem::ns()), 0.3, 0.6, 0.5);
  expect_triplet(disjunct(kA1, kA2, OperatorSystem::ifs()), 0.4, 0.5, 0.1);
  expect_triplet(disjunct(kA1, kA2, OperatorSystem::ns()), 0.4, 0.1, 0.1);
  expect_triplet(implicate(kA1, kA2, OperatorSystem::ifs()), 0.4, 0.3, 0.3);
  expect_triplet(implicate(kA1, kA2, OperatorSystem::ns()), 0.4, 0.1, 0.3);
}

TEST(Conjunct, IfsAndNsDisagreeOnlyInIndeterminacy) {
  for (auto op : {SetOp::And, SetOp::Or, SetOp::Implies, SetOp::Not}) {
    const Triplet a = apply(op, kA1, kA2, OperatorSystem::ifs());
    const Triplet b = apply(op, kA1, kA2, OperatorSystem::ns());
    EXPECT_NEAR(a.t, b.t, kEpsilon);
    EXPECT_NEAR(a.f, b.f, kEpsilon);
    EXPECT_GT(std::abs(a.i - b.i), kPrintedTolerance);
  }
}

TEST(Conjunct, IifsMaxIRescalesOnOverflow) {
  const Triplet a(0.50, 0.11, 0.33), b(0.55, 0.18, 0.09);
  // min T = 0.5, max I = 0.18, max F = 0.33: the sum 1.01 overflows.
  const Triplet r = conjunct(a, b, OperatorSystem::iifs_max_i());
  expect_triplet(r, 0.50 / 1.01, 0.18 / 1.01, 0.33 / 1.01);
  EXPECT_NEAR(r.sum(), 1.0, kEpsilon);
  expect_triplet(r, 0.495, 0.178, 0.327, 1e-3);

  const Triplet lesser = conjunct(
      a, b, OperatorSystem::iifs_max_i(OverflowNumerator::LesserI));
  expect_triplet(lesser, 0.495, 0.109, 0.326, 1e-3);
}

TEST(Conjunct, IifsMaxIWithoutOverflowIsPlain) {
  const Triplet a(0.44, 0.17, 0.28), b(0.18, 0.09, 0.27);
  expect_triplet(conjunct(a, b, OperatorSystem::iifs_max_i()), 0.18, 0.17,
                 0.28);
  expect_triplet(conjunct(a, b, OperatorSystem::iifs_min_i()), 0.18, 0.09,
                 0.28);
  expect_triplet(disjunct(a, b, OperatorSystem::iifs_min_i()), 0.44, 0.09,
                 0.27);
}

TEST(Implicate, FalseImpliesTrue) {
  expect_triplet(implicate(Triplet(0, 0, 1), Triplet(1, 0, 0)), 1.0, 0.0, 0.0);
}

TEST(Conjunct, Idempotent) {
  for (const Triplet& x : {kA1, kA2, Triplet(0.9, 0.4, 0.5)}) {
    EXPECT_EQ(conjunct(x, x), x);
    EXPECT_EQ(disjunct(x, x), x);
  }
}

TEST(Norms, ProductPair) {
  const auto sys = OperatorSystem::ns(NormPair::product());
  expect_triplet(conjunct(kA1, kA2, sys), 0.12, 0.6 + 0.1 - 0.06,
                 0.1 + 0.5 - 0.05);
  expect_triplet(disjunct(kA1, kA2, sys), 0.3 + 0.4 - 0.12, 0.06, 0.05);
}

TEST(Operators, RejectInvalidOperands) {
  const Triplet paradox(1, 1, 1);
  EXPECT_THROW(conjunct(paradox, kA1, OperatorSystem::iifs_max_i()),
               ConstraintError);
  EXPECT_THROW(negate(Triplet(0.3, 0.3, 0.1), OperatorSystem::ifs()),
               ConstraintError);
  EXPECT_NO_THROW(conjunct(paradox, kA1, OperatorSystem::ns()));
}

TEST(Operators, ParseNames) {
  EXPECT_EQ(parse_system("IIFS2"), System::IIFS_MinI);
  EXPECT_EQ(parse_system("IIFS_MaxI"), System::IIFS_MaxI);
  EXPECT_EQ(parse_set_op("implies"), SetOp::Implies);
  EXPECT_THROW(parse_system("FS"), UsageError);
  EXPECT_THROW(parse_set_op("xor"), UsageError);
}

TEST(LabeledSet, Construction) {
  EXPECT_THROW(LabeledSet({"x", "x"}, {kA1, kA2}), UsageError);
  EXPECT_THROW(LabeledSet({"x"}, {kA1, kA2}), UsageError);
  EXPECT_THROW(LabeledSet({"x"}, {Triplet(0.9, 0.4, 0.5)}, FamilySpec::sfs()),
               ConstraintError);
  EXPECT_THROW(LabeledSet({"x"}, {kA1}, FamilySpec::pyfs()), UsageError);
  const LabeledSet s({"x1", "x2"}, {kA1, kA2});
  EXPECT_EQ(*s.find("x2"), kA2);
  EXPECT_FALSE(s.find("x3").has_value());
}

TEST(LabeledSet, SetwiseMatchesElementwise) {
  const LabeledSet a({"x1", "x2"}, {kA1, kA2});
  const LabeledSet b({"x1", "x2"}, {kA2, kA1});
  const auto c = setwise(a, b, SetOp::Or);
  EXPECT_EQ(c[0], disjunct(kA1, kA2));
  EXPECT_EQ(c[1], disjunct(kA2, kA1));
  EXPECT_EQ(setwise_negate(a)[1], negate(kA2));
  const LabeledSet other({"y1", "y2"}, {kA1, kA2});
  EXPECT_THROW(setwise(a, other, SetOp::And), UsageError);
}

}  // namespace
}  // namespace neutro
