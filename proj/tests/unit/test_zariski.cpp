#include <gtest/gtest.h>

#include "conecalc/cone_catalog.hpp"
#include "conecalc/errors.hpp"
#include "conecalc/zariski.hpp"
#include "generators.hpp"

using namespace conecalc;
using conecalc::testing::Rng;

namespace {
const HNCurveBundle kSplit(2, 0, {{1, -1}, {1, 1}});
const HNCurveBundle kTrivial = HNCurveBundle::semistable(2, 0);
const HNCurveBundle kDeep(3, 4, {{1, 0}, {2, 4}});

QVector add3(const QVector& a, const QVector& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
}  // namespace

TEST(CoordinateTransport, Identity) {
  EXPECT_EQ(coordinate_transport({1, 2, 3}), (QVector{1, 2, 3}));
  EXPECT_EQ(coordinate_transport({0, 0, 0}), (QVector{0, 0, 0}));
  EXPECT_EQ(coordinate_transport({-1, 0, 5}), (QVector{-1, 0, 5}));
  EXPECT_THROW(coordinate_transport({1, 2}), DimensionMismatch);
}

TEST(ReduceStep, PublishedExample) {
  const auto res = reduce_step(kDeep, kTrivial, Factor::First, {2, 1, 5});
  ASSERT_TRUE(res.has_value());
  EXPECT_EQ(res->first.multiplicity, 2);
  EXPECT_EQ(res->first.to_bundle, HNCurveBundle::semistable(2, 4));
  EXPECT_EQ(res->first.center_rank, 1);
  EXPECT_EQ(res->second, (QVector{2, 1, 5}));
}

TEST(ReduceStep, ZeroMultiplicityAndTerminalSignal) {
  const auto res = reduce_step(kDeep, kTrivial, Factor::First, {0, 1, 5});
  ASSERT_TRUE(res.has_value());
  EXPECT_EQ(res->first.multiplicity, 0);
  EXPECT_FALSE(reduce_step(kSplit, kTrivial, Factor::First, {1, 1, 0}).has_value());
  EXPECT_FALSE(reduce_step(kDeep, kTrivial, Factor::Second, {1, 1, 5}).has_value());
  EXPECT_THROW(reduce_step(kDeep, kTrivial, Factor::First, {-1, 0, 0}), NotPseudoeffective);
}

TEST(TerminalDecompose, PublishedExamples) {
  const TerminalSplit a = terminal_decompose(kTrivial, kTrivial, {1, 2, 3});
  EXPECT_EQ(a.terminal, TerminalCase::BothSemistable);
  EXPECT_EQ(a.nef_part, (QVector{1, 2, 3}));
  EXPECT_TRUE(a.effective_part.empty());

  const TerminalSplit b = terminal_decompose(kSplit, kTrivial, {1, 1, 0});
  EXPECT_EQ(b.terminal, TerminalCase::FirstCorankOne);
  EXPECT_EQ(b.nef_part, (QVector{0, 1, 1}));
  ASSERT_EQ(b.effective_part.size(), 1u);
  EXPECT_EQ(b.effective_part[0].generator, (QVector{1, 0, -1}));
  EXPECT_EQ(b.effective_part[0].coefficient, 1);
  EXPECT_TRUE(fibre_product_nef_cone(kSplit, kTrivial).contains(b.nef_part));

  const TerminalSplit c = terminal_decompose(kSplit, kSplit, {1, 1, -2});
  EXPECT_EQ(c.terminal, TerminalCase::BothCorankOne);
  EXPECT_EQ(c.nef_part, (QVector{0, 0, 0}));
  ASSERT_EQ(c.effective_part.size(), 2u);
  EXPECT_EQ(c.effective_part[0].generator, (QVector{1, 0, -1}));
  EXPECT_EQ(c.effective_part[1].generator, (QVector{0, 1, -1}));
  const RationalCone psef = fibre_product_psef_cone(kSplit, kSplit);
  EXPECT_TRUE(psef.contains({1, 1, -2}));
  EXPECT_FALSE(psef.contains({1, 1, make_rational(-5, 2)}));

  EXPECT_EQ(terminal_decompose(kTrivial, kSplit, {2, 1, 0}).terminal, TerminalCase::SecondCorankOne);
}

TEST(TerminalDecompose, Errors) {
  EXPECT_THROW(terminal_decompose(kDeep, kTrivial, {1, 0, 0}), InvalidInput);
  try {
    terminal_decompose(kSplit, kTrivial, {1, 0, -2});
    FAIL();
  } catch (const NotPseudoeffective& e) {
    EXPECT_NE(std::string(e.what()).find("mu_max"), std::string::npos);
  }
  EXPECT_THROW(terminal_decompose(kSplit, kTrivial, {0, -1, 5}), NotPseudoeffective);
}

TEST(Decompose, SemistableHasNoSteps) {
  const ZariskiCertificate c = decompose(kTrivial, HNCurveBundle::semistable(3, 1), {2, 1, 7});
  EXPECT_TRUE(c.steps.empty());
  EXPECT_TRUE(c.effective_part.empty());
  EXPECT_EQ(c.terminal, TerminalCase::BothSemistable);
  EXPECT_TRUE(c.verified);
}

TEST(Decompose, OneStepExample) {
  const ZariskiCertificate c = decompose(kDeep, kTrivial, {2, 1, 5});
  ASSERT_EQ(c.steps.size(), 1u);
  EXPECT_EQ(c.steps[0].multiplicity, 2);
  EXPECT_EQ(c.terminal, TerminalCase::BothSemistable);
  // 2(xi - 2F) + zeta + 9F.
  EXPECT_EQ(c.nef_part, (QVector{2, 1, 5}));
  EXPECT_EQ(add3(add3(QVector{2, 0, -4}, QVector{0, 1, 0}), QVector{0, 0, 9}), c.nef_part);
  EXPECT_TRUE(RationalCone(3, {{1, 0, -2}, {0, 1, 0}, {0, 0, 1}}).contains(c.nef_part));
  EXPECT_TRUE(c.verified);
}

TEST(Decompose, TwoPhaseExample) {
  const HNCurveBundle e(4, 0, {{1, -2}, {2, 0}, {1, 2}});
  const ZariskiCertificate c = decompose(e, kTrivial, {1, 1, 3});
  ASSERT_EQ(c.steps.size(), 1u);
  EXPECT_EQ(c.steps[0].center_rank, 1);
  EXPECT_EQ(c.steps[0].to_bundle, HNCurveBundle(3, 2, {{2, 0}, {1, 2}}));
  EXPECT_EQ(c.terminal, TerminalCase::FirstCorankOne);
  ASSERT_EQ(c.effective_part.size(), 1u);
  EXPECT_EQ(c.effective_part[0].generator, (QVector{1, 0, -2}));
  EXPECT_TRUE(verify(c, e, kTrivial));
}

TEST(Decompose, RejectsNonPseudoeffective) {
  EXPECT_THROW(decompose(kTrivial, kTrivial, {-1, 0, 0}), NotPseudoeffective);
  EXPECT_THROW(decompose(kSplit, kSplit, {1, 1, -3}), NotPseudoeffective);
}

TEST(Verify, DetectsTampering) {
  ZariskiCertificate c = decompose(kSplit, kTrivial, {1, 1, 0});
  ZariskiCertificate bad = c;
  bad.nef_part = {0, 0, -1};
  auto reasons = verify_reasons(bad, kSplit, kTrivial);
  EXPECT_NE(std::find(reasons.begin(), reasons.end(), "P not nef"), reasons.end());

  ZariskiCertificate deep = decompose(kDeep, kTrivial, {2, 1, 5});
  deep.steps[0].multiplicity = -deep.steps[0].multiplicity;
  reasons = verify_reasons(deep, kDeep, kTrivial);
  EXPECT_NE(std::find(reasons.begin(), reasons.end(), "step 1: negative exceptional multiplicity"), reasons.end());

  ZariskiCertificate neg = c;
  neg.effective_part[0].coefficient = -1;
  EXPECT_FALSE(verify(neg, kSplit, kTrivial));

  ZariskiCertificate label = c;
  label.terminal = TerminalCase::BothSemistable;
  EXPECT_FALSE(verify(label, kSplit, kTrivial));

  ZariskiCertificate dropped = deep;
  dropped.steps.clear();
  EXPECT_FALSE(verify(dropped, kDeep, kTrivial));
}

TEST(ExtremalRays, Examples) {
  for (const auto& [ray, cert] : extremal_ray_decompositions(kTrivial, kTrivial)) {
    EXPECT_EQ(cert.nef_part, ray);
    EXPECT_TRUE(cert.effective_part.empty());
  }
  for (const auto& [ray, cert] : extremal_ray_decompositions(kSplit, kTrivial)) {
    if (ray == QVector{1, 0, -1}) {
      EXPECT_EQ(cert.nef_part, (QVector{0, 0, 0}));
      ASSERT_EQ(cert.effective_part.size(), 1u);
    } else {
      EXPECT_EQ(cert.nef_part, ray);
      EXPECT_TRUE(cert.effective_part.empty());
    }
  }
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const auto e = conecalc::testing::random_bundle(rng, 2, 5, 3, 10);
    const auto e2 = conecalc::testing::random_bundle(rng, 2, 5, 3, 10);
    for (const auto& [ray, cert] : extremal_ray_decompositions(e, e2)) {
      const bool nef_ray = cert.effective_part.empty() && cert.nef_part == ray;
      const bool eff_ray = is_zero(cert.nef_part) && cert.effective_class() == ray;
      EXPECT_TRUE(nef_ray || eff_ray) << to_string(ray);
      if (ray == QVector{0, 0, 1}) {
        EXPECT_TRUE(nef_ray);
      }
    }
  }
}

TEST(Properties, LinearityOnCertificates) {
  Rng rng(42);
  for (int t = 0; t < 300; ++t) {
    const auto e = conecalc::testing::random_bundle(rng, 2, 5, 3, 10);
    const auto e2 = conecalc::testing::random_bundle(rng, 2, 5, 3, 10);
    const QVector x = conecalc::testing::random_psef_class(rng, e, e2);
    const QVector y = conecalc::testing::random_psef_class(rng, e, e2);
    const auto cx = decompose(e, e2, x), cy = decompose(e, e2, y), cxy = decompose(e, e2, add3(x, y));
    EXPECT_EQ(cxy.nef_part, add3(cx.nef_part, cy.nef_part));
    EXPECT_EQ(cxy.effective_class(), add3(cx.effective_class(), cy.effective_class()));
  }
}

TEST(Properties, ChainMatchesClosedFormPsef) {
  Rng rng(43);
  for (int t = 0; t < 300; ++t) {
    const auto e = conecalc::testing::random_bundle(rng, 2, 5, 3, 10);
    const auto e2 = conecalc::testing::random_bundle(rng, 2, 5, 3, 10);
    // Walk each factor to its terminal bundle; the maximal slope survives.
    HNCurveBundle t1 = e, t2 = e2;
    while (reducible(t1)) t1 = sub_bundle_after_step(t1, 1);
    while (reducible(t2)) t2 = sub_bundle_after_step(t2, 1);
    EXPECT_TRUE(equals(fibre_product_psef_cone(e, e2), fibre_product_psef_cone(t1, t2)));
    const QVector v = conecalc::testing::random_psef_class(rng, e, e2);
    const auto c = decompose(e, e2, v);
    for (const auto& s : c.steps) EXPECT_GE(s.multiplicity, 0);
  }
}

TEST(Properties, ReductionOrderIndependence) {
  const HNCurveBundle a(5, 0, {{1, -4}, {2, 0}, {2, 4}});
  const HNCurveBundle b(4, 2, {{2, -2}, {2, 4}});
  const QVector v{3, 2, 20};
  const auto first = decompose(a, b, v, ReductionOrder::FirstThenSecond);
  const auto second = decompose(a, b, v, ReductionOrder::SecondThenFirst);
  const auto alt = decompose(a, b, v, ReductionOrder::Alternating);
  EXPECT_EQ(first.steps.size(), 3u);
  EXPECT_EQ(first.steps.front().factor, Factor::First);
  EXPECT_EQ(second.steps.front().factor, Factor::Second);
  EXPECT_EQ(first.nef_part, second.nef_part);
  EXPECT_EQ(first.effective_part, alt.effective_part);
  EXPECT_TRUE(verify(second, a, b));
  EXPECT_TRUE(verify(alt, a, b));
}
