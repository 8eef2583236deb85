#include <benchmark/benchmark.h>

#include "conecalc/cone_catalog.hpp"
#include "conecalc/cones.hpp"
#include "conecalc/intersection_ring.hpp"
#include "conecalc/zariski.hpp"
#include "generators.hpp"

using namespace conecalc;
using conecalc::testing::Rng;

static void BM_DualRandomCone(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(1);
  std::vector<RationalCone> cones;
  for (int i = 0; i < 32; ++i) cones.emplace_back(dim, conecalc::testing::random_integer_vectors(rng, 2 * dim, dim, 3));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dual(cones[i++ % cones.size()]));
}
BENCHMARK(BM_DualRandomCone)->DenseRange(2, 6);

static void BM_NormalFormFibreProduct(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const IntersectionRing ring = build_fibre_product_ring(m, m, 3, -2);
  const Polynomial p = power(ring.parse("xi + 2*zeta - 3*F"), ring.dim());
  for (auto _ : state) benchmark::DoNotOptimize(ring.degree(p));
}
BENCHMARK(BM_NormalFormFibreProduct)->DenseRange(2, 5);

static void BM_DecomposeRandom(benchmark::State& state) {
  Rng rng(2);
  struct Case {
    HNCurveBundle e, e2;
    QVector cls;
  };
  std::vector<Case> cases;
  for (int i = 0; i < 64; ++i) {
    auto e = conecalc::testing::random_bundle(rng, 2, 5, 3, 10);
    auto e2 = conecalc::testing::random_bundle(rng, 2, 5, 3, 10);
    auto cls = conecalc::testing::random_psef_class(rng, e, e2);
    cases.push_back({std::move(e), std::move(e2), std::move(cls)});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const Case& c = cases[i++ % cases.size()];
    benchmark::DoNotOptimize(decompose(c.e, c.e2, c.cls));
  }
}
BENCHMARK(BM_DecomposeRandom);

static void BM_KHomogeneityRuled(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const SurfacePreset p = SurfacePreset::ruled(r, make_rational(1, 2), {0, 0}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(is_k_homogeneous(p, r / 2));
}
BENCHMARK(BM_KHomogeneityRuled)->DenseRange(2, 6);
BENCHMARK_MAIN();
