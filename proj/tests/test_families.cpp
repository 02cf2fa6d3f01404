#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "neutro/families.hpp"

namespace neutro {
namespace {

TEST(FamilySpec, ExponentRules) {
  EXPECT_THROW(FamilySpec::qrofs(0.5), UsageError);
  EXPECT_THROW(FamilySpec::nhsfs(std::nan("")), UsageError);
  EXPECT_THROW(FamilySpec::nhsns(INFINITY), UsageError);
  EXPECT_EQ(FamilySpec::qrofs(2.5).power(), 2.5);
  EXPECT_EQ(FamilySpec(FamilyKind::NS, 7.0).exponent(), 1.0);
  EXPECT_EQ(FamilySpec::sfs().power(), 2.0);
}

TEST(FamilySpec, ParsesNamesAndAliases) {
  EXPECT_EQ(parse_family_kind("NS"), FamilyKind::NS);
  EXPECT_EQ(parse_family_kind("PFS"), FamilyKind::IIFS);
  EXPECT_EQ(parse_family_kind("TFS"), FamilyKind::IIFS);
  EXPECT_EQ(parse_family_kind("NHSNS"), FamilyKind::NHSNS);
  EXPECT_THROW(parse_family_kind("XYZ"), UsageError);
}

TEST(Validate, WitnessIsNeutrosophicButNotSpherical) {
  const Triplet w(0.9, 0.4, 0.5);
  const auto ns = validate(w, FamilySpec::ns());
  EXPECT_TRUE(ns.valid);
  EXPECT_NEAR(ns.constraint_value, 1.8, kEpsilon);
  EXPECT_EQ(ns.bound, 3.0);
  const auto sfs = validate(w, FamilySpec::sfs());
  EXPECT_FALSE(sfs.valid);
  EXPECT_NEAR(sfs.constraint_value, 1.22, kEpsilon);
  EXPECT_EQ(sfs.bound, 1.0);
}

TEST(Validate, ParadoxTriplet) {
  const Triplet p(1.0, 1.0, 1.0);
  EXPECT_TRUE(is_valid(p, FamilySpec::ns()));
  EXPECT_FALSE(is_valid(p, FamilySpec::iifs()));
}

TEST(Validate, SumOneTripletUnderIfsAndNs) {
  const Triplet x(0.3, 0.6, 0.1);
  EXPECT_TRUE(is_valid(x, FamilySpec::ifs()));
  EXPECT_TRUE(is_valid(x, FamilySpec::ns()));
  EXPECT_TRUE(is_valid(Pair(0.3, 0.1), FamilySpec::ifs()));
  // An IFS triplet carries the remainder as its indeterminacy.
  EXPECT_FALSE(is_valid(Triplet(0.3, 0.5, 0.1), FamilySpec::ifs()));
}

TEST(Validate, ArityMismatchIsUsageError) {
  const std::array<double, 3> three{0.1, 0.2, 0.3};
  const std::array<double, 2> two{0.1, 0.2};
  EXPECT_THROW(validate_components(three, FamilySpec::pyfs()), UsageError);
  EXPECT_THROW(validate_components(two, FamilySpec::sfs()), UsageError);
  EXPECT_THROW(validate(Pair(0.1, 0.2), FamilySpec::ns()), UsageError);
}

TEST(Validate, PairFamilies) {
  EXPECT_TRUE(is_valid(Pair(0.6, 0.4), FamilySpec::ifs()));
  EXPECT_FALSE(is_valid(Pair(0.6, 0.5), FamilySpec::ifs()));
  EXPECT_TRUE(is_valid(Pair(0.6, 0.5), FamilySpec::pyfs()));
  EXPECT_FALSE(is_valid(Pair(0.9, 0.8), FamilySpec::pyfs()));
  EXPECT_TRUE(is_valid(Pair(0.9, 0.8), FamilySpec::qrofs(5)));
  const std::array<double, 1> fs{0.7};
  EXPECT_TRUE(validate_components(fs, FamilySpec::fs()).valid);
}

TEST(Validate, SphericalNeutrosophicRanges) {
  const double r3 = std::sqrt(3.0);
  const std::array<double, 3> corner{r3 * 0.57, r3 * 0.57, r3 * 0.57};
  EXPECT_TRUE(validate_components(corner, FamilySpec::sns()).valid);
  const std::array<double, 3> over{1.8, 0.0, 0.0};
  EXPECT_FALSE(validate_components(over, FamilySpec::sns()).valid);
  const double c3 = std::cbrt(3.0);
  const std::array<double, 3> top{c3, 0.0, 0.0};
  EXPECT_TRUE(validate_components(top, FamilySpec::nhsns(3)).valid);
  const std::array<double, 3> past{c3 + 0.01, 0.0, 0.0};
  EXPECT_FALSE(validate_components(past, FamilySpec::nhsns(3)).valid);
}

TEST(Validate, NhsfsTwoIsSfs) {
  for (double t = 0.0; t <= 1.0; t += 0.05) {
    for (double i = 0.0; i <= 1.0; i += 0.05) {
      for (double f = 0.0; f <= 1.0; f += 0.05) {
        const Triplet x(std::min(t, 1.0), std::min(i, 1.0), std::min(f, 1.0));
        ASSERT_EQ(is_valid(x, FamilySpec::nhsfs(2.0)),
                  is_valid(x, FamilySpec::sfs()));
      }
    }
  }
}

TEST(Validate, IntervalsUseSuprema) {
  const IntervalPair ok{IntervalValue(0.2, 0.5), IntervalValue(0.1, 0.5)};
  EXPECT_TRUE(validate(ok, FamilySpec::ifs()).valid);
  const IntervalPair bad{IntervalValue(0.2, 0.6), IntervalValue(0.1, 0.5)};
  EXPECT_FALSE(validate(bad, FamilySpec::ifs()).valid);
  const Triplet x(0.3, 0.3, 0.3);
  EXPECT_EQ(validate(IntervalTriplet::from(x), FamilySpec::iifs()).valid,
            validate(x, FamilySpec::iifs()).valid);
}

TEST(Hesitancy, PublishedValues) {
  EXPECT_NEAR(hesitancy(Pair(0.5, 0.31), FamilySpec::ifs()), 0.19, kEpsilon);
  EXPECT_NEAR(hesitancy(Pair(0.9, 0.2), FamilySpec::pyfs()), std::sqrt(0.15),
              kEpsilon);
  EXPECT_NEAR(hesitancy(Pair(0.9, 0.2), FamilySpec::pyfs()), 0.39,
              kPrintedTolerance);
  EXPECT_EQ(hesitancy(Pair(1.0, 0.0), FamilySpec::pyfs()), 0.0);
  EXPECT_NEAR(hesitancy(Pair(0.5, 0.5), FamilySpec::qrofs(3)),
              std::cbrt(0.75), kEpsilon);
}

TEST(Hesitancy, Errors) {
  EXPECT_THROW(hesitancy(Pair(0.9, 0.5), FamilySpec::pyfs()), ConstraintError);
  EXPECT_THROW(hesitancy(Pair(0.1, 0.1), FamilySpec::sfs()), UsageError);
}

TEST(Refusal, PublishedValues) {
  EXPECT_NEAR(refusal(Triplet(0.44, 0.17, 0.28), FamilySpec::iifs()), 0.11,
              kEpsilon);
  EXPECT_NEAR(refusal(Triplet(0.18, 0.09, 0.27), FamilySpec::iifs()), 0.46,
              kEpsilon);
  EXPECT_EQ(refusal(Triplet(0, 0, 0), FamilySpec::sfs()), 1.0);
}

TEST(Refusal, NhsfsTakesNthRoot) {
  const Triplet x(0.5, 0.5, 0.5);
  const double n = 3.0;
  EXPECT_NEAR(refusal(x, FamilySpec::nhsfs(n)),
              std::pow(1.0 - 3 * std::pow(0.5, n), 1.0 / n), kEpsilon);
  EXPECT_EQ(refusal(x, FamilySpec::nhsfs(2.0)), refusal(x, FamilySpec::sfs()));
  EXPECT_THROW(refusal(Triplet(0.9, 0.4, 0.5), FamilySpec::sfs()),
               ConstraintError);
  EXPECT_THROW(refusal(x, FamilySpec::ns()), UsageError);
}

TEST(Embed, PublishedMaps) {
  const Triplet py = embed_into_ns(Pair(0.9, 0.2), FamilySpec::pyfs());
  EXPECT_NEAR(py.t, 0.81, kEpsilon);
  EXPECT_NEAR(py.i, 0.15, kEpsilon);
  EXPECT_NEAR(py.f, 0.04, kEpsilon);
  EXPECT_NEAR(py.sum(), 1.0, kEpsilon);

  const Triplet s = embed_into_ns(Triplet(0.5, 0.5, 0.5), FamilySpec::sfs());
  EXPECT_EQ(s, Triplet(0.25, 0.25, 0.25));

  const Triplet q = embed_into_ns(Pair(0.3, 0.5), FamilySpec::qrofs(1));
  EXPECT_NEAR(q.t, 0.3, kEpsilon);
  EXPECT_NEAR(q.i, 0.2, kEpsilon);
  EXPECT_NEAR(q.f, 0.5, kEpsilon);

  const Triplet x(0.2, 0.3, 0.4);
  EXPECT_EQ(embed_into_ns(x, FamilySpec::iifs()), x);
  EXPECT_EQ(embed_into_ns(x, FamilySpec::ns()), x);
}

TEST(Embed, Errors) {
  EXPECT_THROW(embed_into_ns(Pair(0.9, 0.5), FamilySpec::pyfs()),
               ConstraintError);
  EXPECT_THROW(embed_into_ns(Triplet(0.9, 0.4, 0.5), FamilySpec::sfs()),
               ConstraintError);
  EXPECT_THROW(embed_into_ns(Triplet(0.1, 0.1, 0.1), FamilySpec::pyfs()),
               UsageError);
}

TEST(Counterexample, CanonicalWitnesses) {
  EXPECT_EQ(find_counterexample(StrictnessClaim::NsNotSfs),
            Triplet(0.9, 0.4, 0.5));
  const Triplet q = find_counterexample(StrictnessClaim::NsNotQrofs, 2.0);
  EXPECT_EQ(q.t, 1.0);
  EXPECT_EQ(q.f, 0.5);
  EXPECT_EQ(find_counterexample(StrictnessClaim::NsNotIifs),
            Triplet(1.0, 1.0, 1.0));
}

TEST(Counterexample, WitnessesSeparateFamilies) {
  for (auto claim : {StrictnessClaim::NsNotSfs, StrictnessClaim::NsNotQrofs,
                     StrictnessClaim::NsNotNhsfs, StrictnessClaim::NsNotIifs}) {
    for (double e : {1.0, 1.5, 2.0, 5.0, 16.0, 17.0, 100.0}) {
      const Triplet w = find_counterexample(claim, e);
      EXPECT_TRUE(is_valid(w, FamilySpec::ns()));
      EXPECT_FALSE(validate_against_claim(w, claim, e).valid)
          << "claim " << static_cast<int>(claim) << " exponent " << e;
    }
  }
  EXPECT_THROW(find_counterexample(StrictnessClaim::NsNotQrofs, 0.5),
               UsageError);
}

TEST(CubeRegion, PublishedPoints) {
  EXPECT_EQ(classify_cube_region(Triplet(0.3, 0.6, 0.1)), CubeRegion::Complete);
  EXPECT_EQ(classify_cube_region(Triplet(0.2, 0.1, 0.3)),
            CubeRegion::Incomplete);
  EXPECT_EQ(classify_cube_region(Triplet(0.8, 0.3, 0.5)),
            CubeRegion::Paraconsistent);
}

TEST(CubeRegion, ToleranceWidensThePlane) {
  const Triplet x(0.3, 0.3, 0.405);
  EXPECT_EQ(classify_cube_region(x), CubeRegion::Paraconsistent);
  EXPECT_EQ(classify_cube_region(x, 0.01), CubeRegion::Complete);
}

}  // namespace
}  // namespace neutro
