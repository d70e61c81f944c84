#include <gtest/gtest.h>

#include <random>

#include "relalg/semiring.hpp"

namespace relalg {
namespace {

// Integers with ⊗ := subtraction: deliberately not a semiring.
struct SubtractionRing {
  using value_type = std::int64_t;
  static constexpr std::string_view name = "subtraction";
  static constexpr std::int64_t zero() { return 0; }
  static constexpr std::int64_t one() { return 0; }
  static constexpr std::int64_t oplus(std::int64_t a, std::int64_t b) { return a + b; }
  static constexpr std::int64_t otimes(std::int64_t a, std::int64_t b) { return a - b; }
  static std::string format(std::int64_t v) { return std::to_string(v); }
};

TEST(BooleanSemiring, TruthTables) {
  EXPECT_EQ(std::get<bool>(oplus(SemiringKind::kBoolean, true, false)), true);
  EXPECT_EQ(std::get<bool>(oplus(SemiringKind::kBoolean, false, false)), false);
  EXPECT_EQ(std::get<bool>(otimes(SemiringKind::kBoolean, true, true)), true);
  for (const bool x : {false, true}) {
    EXPECT_FALSE(std::get<bool>(otimes(SemiringKind::kBoolean, x, false)));
  }
}

TEST(BooleanSemiring, StarIsAlwaysOne) {
  EXPECT_TRUE(BooleanSemiring::star(false));
  EXPECT_TRUE(BooleanSemiring::star(true));
  EXPECT_TRUE(std::get<bool>(star(SemiringKind::kBoolean, false)));
}

TEST(TropicalSemiring, MinPlus) {
  EXPECT_EQ(TropicalSemiring::oplus(Weight(3), Weight(5)), Weight(3));
  EXPECT_EQ(TropicalSemiring::otimes(Weight(3), Weight(5)), Weight(8));
  EXPECT_EQ(TropicalSemiring::otimes(Weight(3), Weight::infinity()), Weight::infinity());
  EXPECT_EQ(TropicalSemiring::oplus(Weight::infinity(), Weight(7)), Weight(7));
}

TEST(TropicalSemiring, StarOfNonNegativeIsZeroWeight) {
  const Weight s = TropicalSemiring::star(Weight(4));
  EXPECT_EQ(s, Weight(0));
  // a* = min(0, a + a*) holds by substitution.
  EXPECT_EQ(TropicalSemiring::oplus(TropicalSemiring::one(),
                                    TropicalSemiring::otimes(Weight(4), s)),
            s);
  EXPECT_EQ(TropicalSemiring::star(Weight::infinity()), Weight(0));
}

TEST(TropicalSemiring, StarOfNegativeWeightIsUndefined) {
  try {
    TropicalSemiring::star(Weight(-1));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndefinedClosure);
  }
}

TEST(TropicalSemiring, AdditionSaturatesToInfinity) {
  const Weight big(std::numeric_limits<std::int64_t>::max() - 1);
  EXPECT_TRUE(TropicalSemiring::otimes(big, Weight(5)).is_infinite());
}

TEST(CountingSemiring, ScalarStar) {
  EXPECT_EQ(CountingSemiring::star(0), 1U);
  try {
    CountingSemiring::star(3);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndefinedClosure);
  }
}

TEST(CountingSemiring, OverflowIsReported) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  EXPECT_THROW(CountingSemiring::oplus(max, 1), Error);
  EXPECT_THROW(CountingSemiring::otimes(max, 2), Error);
  EXPECT_EQ(CountingSemiring::otimes(max, 1), max);
}

TEST(RuntimeSemiring, MixedCarriersAreATypeError) {
  try {
    oplus(SemiringKind::kBoolean, true, Weight(3));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kType);
  }
  EXPECT_THROW(otimes(SemiringKind::kTropical, Weight(1), std::uint64_t{2}), Error);
}

TEST(RuntimeSemiring, NamesRoundTrip) {
  for (const auto kind : {SemiringKind::kBoolean, SemiringKind::kTropical, SemiringKind::kCounting}) {
    EXPECT_EQ(parse_semiring_kind(semiring_name(kind)), kind);
  }
  EXPECT_THROW(parse_semiring_kind("real"), Error);
}

TEST(AxiomAudit, BooleanPassesEverything) {
  const AxiomReport report = check_axioms<BooleanSemiring>(std::vector<bool>{false, true});
  EXPECT_TRUE(report.all_passed());
  ASSERT_NE(report.find("closure_left"), nullptr);
  EXPECT_EQ(report.find("oplus_associative")->cases, 8U);
}

TEST(AxiomAudit, TropicalPassesOnFourSamples) {
  const std::vector<Weight> samples{Weight(0), Weight(1), Weight(3), Weight::infinity()};
  const AxiomReport report = check_axioms<TropicalSemiring>(samples);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.find("left_distributive")->cases, 64U);
}

TEST(AxiomAudit, CountingPassesWhereStarIsDefined) {
  const AxiomReport report = check_default_axioms(SemiringKind::kCounting);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.find("closure_left")->cases, 1U);  // only star(0) exists
}

TEST(AxiomAudit, SubtractionFailsAssociativityAndDistributivity) {
  const AxiomReport report = check_axioms<SubtractionRing>(std::vector<std::int64_t>{1, 2, 3});
  EXPECT_FALSE(report.all_passed());
  EXPECT_FALSE(report.find("otimes_associative")->passed);
  EXPECT_FALSE(report.find("left_distributive")->passed);
  EXPECT_FALSE(report.find("otimes_associative")->counterexample.empty());
  EXPECT_EQ(report.find("closure_left"), nullptr);  // no star, no closure law
}

TEST(AxiomAudit, EmptySampleSetIsRejected) {
  EXPECT_THROW(check_axioms<TropicalSemiring>(std::vector<Weight>{}), Error);
}

TEST(AxiomAudit, RandomTropicalSamplesPass) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> w(0, 1000);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Weight> samples{Weight::infinity()};
    for (int k = 0; k < 6; ++k) samples.emplace_back(w(rng));
    EXPECT_TRUE(check_axioms<TropicalSemiring>(samples).all_passed());
  }
}

}  // namespace
}  // namespace relalg
