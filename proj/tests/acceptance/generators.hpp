#pragma once

#include <random>
#include <vector>

#include "conecalc/bundles.hpp"
#include "conecalc/intersection_ring.hpp"
#include "conecalc/rational.hpp"

namespace conecalc::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20261016;

long uniform_int(Rng& rng, long lo, long hi);
/// p/q with |p| <= max_num, 1 <= q <= max_den.
Rational random_rational(Rng& rng, long max_num, long max_den);
Rational random_nonneg_rational(Rng& rng, long max_num, long max_den);

/// Random valid HN ladder: total rank in [min_rank, max_rank], depth in
/// [1, max_depth], quotient degrees in [-max_deg, max_deg].
HNCurveBundle random_bundle(Rng& rng, int min_rank, int max_rank, int max_depth, long max_deg);
HNCurveBundle random_semistable(Rng& rng, int min_rank, int max_rank, long max_deg);
/// Unstable with a corank-one minimal quotient: ladder [(r-1, d1), (1, d2)].
HNCurveBundle random_corank_one(Rng& rng, int min_rank, int max_rank, long max_deg);

/// Point a*g1 + b*g2 + c*F of the psef cone <xi - M F, zeta - M' F, F>.
QVector random_psef_class(Rng& rng, const HNCurveBundle& e, const HNCurveBundle& e2);
/// Same construction over the nef generators.
QVector random_nef_class(Rng& rng, const HNCurveBundle& e, const HNCurveBundle& e2);

/// Surface presets with c_2(End E) = 0.
SurfacePreset random_rho1_preset(Rng& rng, int rank);
SurfacePreset random_ruled_preset(Rng& rng, int rank);

std::vector<QVector> random_integer_vectors(Rng& rng, int count, int dim, long bound);

}  // namespace conecalc::testing
