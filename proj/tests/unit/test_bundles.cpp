#include <gtest/gtest.h>

#include "conecalc/bundles.hpp"
#include "conecalc/errors.hpp"

using namespace conecalc;

TEST(Bundles, Slopes) {
  EXPECT_EQ(slope(HNCurveBundle::semistable(2, 3)), make_rational(3, 2));
  const HNCurveBundle e(2, 0, {{1, -1}, {1, 1}});
  EXPECT_EQ(mu_min(e), -1);
  EXPECT_EQ(mu_max(e), 1);
  EXPECT_EQ(slope(e), 0);
  EXPECT_FALSE(e.is_semistable());
  const HNCurveBundle f = HNCurveBundle::semistable(3, -2);
  EXPECT_EQ(mu_min(f), mu_max(f));
}

TEST(Bundles, ValidateReportsEachViolation) {
  EXPECT_TRUE(validate_hn(2, 0, {{1, -1}, {1, 1}}).empty());
  EXPECT_EQ(validate_hn(2, 0, {{1, 1}, {1, -1}}), std::vector<std::string>{"slopes not strictly increasing"});
  EXPECT_EQ(validate_hn(3, 0, {{1, -1}, {1, 1}}), std::vector<std::string>{"rank sum mismatch"});
  EXPECT_EQ(validate_hn(2, 1, {{1, -1}, {1, 1}}), std::vector<std::string>{"degree sum mismatch"});
  const auto zero = validate_hn(2, 0, {{0, 0}, {2, 0}});
  EXPECT_NE(std::find(zero.begin(), zero.end(), "zero-rank quotient"), zero.end());
  // Equal slopes are a tie, not an HN ladder.
  EXPECT_EQ(validate_hn(2, 2, {{1, 1}, {1, 1}}), std::vector<std::string>{"slopes not strictly increasing"});
}

TEST(Bundles, ConstructorThrowsWithAllMessages) {
  try {
    HNCurveBundle(3, 5, {{1, 1}, {1, -1}});
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("rank sum mismatch"), std::string::npos);
    EXPECT_NE(what.find("degree sum mismatch"), std::string::npos);
    EXPECT_NE(what.find("slopes not strictly increasing"), std::string::npos);
  }
  EXPECT_THROW(HNCurveBundle::semistable(0, 1), InvalidInput);
}

TEST(Bundles, SubBundleAfterStep) {
  const HNCurveBundle e(4, 0, {{1, -2}, {2, 0}, {1, 2}});
  const HNCurveBundle e1 = sub_bundle_after_step(e, 1);
  EXPECT_EQ(e1, HNCurveBundle(3, 2, {{2, 0}, {1, 2}}));
  EXPECT_EQ(sub_bundle_after_step(e, 2), HNCurveBundle::semistable(1, 2));
  EXPECT_THROW(sub_bundle_after_step(e, 0), InvalidInput);
  EXPECT_THROW(sub_bundle_after_step(e, 3), InvalidInput);
  EXPECT_EQ(mu_max(e1), mu_max(e));
  const HNCurveBundle f(3, 4, {{1, 0}, {2, 4}});
  EXPECT_EQ(sub_bundle_after_step(f, 1), HNCurveBundle::semistable(2, 4));
}

TEST(Bundles, SymTwist) {
  // Sym^2 of a rank-2 bundle: rank 3, c1 = 3 c1(E).
  const SymTwist s = sym_twist_c1(2, {1}, 2, {0});
  EXPECT_EQ(s.rank, 3);
  EXPECT_EQ(s.c1, (QVector{3}));
  // Sym^1 E (x) L: c1 = c1(E) + r c1(L).
  const SymTwist t = sym_twist_c1(3, {2, 1}, 1, {1, 0});
  EXPECT_EQ(t.rank, 3);
  EXPECT_EQ(t.c1, (QVector{5, 1}));
  // Sym^3 of rank 2: rank 4, c1 = 6 c1(E).
  EXPECT_EQ(sym_twist_c1(2, {1}, 3, {0}).c1, (QVector{6}));
  EXPECT_THROW(sym_twist_c1(2, {1}, 0, {0}), InvalidInput);
}

TEST(Bundles, C2End) {
  // Rank 2 on a rho = 1 surface with L^2 = 1, c1 = 2L, c2 = 1: 4*1 - 4 = 0.
  EXPECT_EQ(c2_end({2, {2}, 1, true}, {{1}}), 0);
  EXPECT_EQ(c2_end({3, {1}, 2, true}, {{3}}), 2 * 3 * 2 - 2 * 3);
  EXPECT_EQ(binomial(5, 2), 10);
}
