#include "generators.hpp"

#include <algorithm>

namespace conecalc::testing {

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long max_num, long max_den) {
  Rational q(Integer(uniform_int(rng, -max_num, max_num)), Integer(uniform_int(rng, 1, max_den)));
  q.canonicalize();
  return q;
}

Rational random_nonneg_rational(Rng& rng, long max_num, long max_den) {
  Rational q(Integer(uniform_int(rng, 0, max_num)), Integer(uniform_int(rng, 1, max_den)));
  q.canonicalize();
  return q;
}

HNCurveBundle random_bundle(Rng& rng, int min_rank, int max_rank, int max_depth, long max_deg) {
  for (;;) {
    const int rank = static_cast<int>(uniform_int(rng, min_rank, max_rank));
    const int depth = static_cast<int>(uniform_int(rng, 1, std::min(max_depth, rank)));
    // Split rank into `depth` positive parts.
    std::vector<int> cuts;
    for (int i = 1; i < rank; ++i) cuts.push_back(i);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(depth - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(rank);
    std::vector<HNQuotient> ladder;
    int prev = 0;
    for (int c : cuts) {
      ladder.push_back({c - prev, uniform_int(rng, -max_deg, max_deg)});
      prev = c;
    }
    std::sort(ladder.begin(), ladder.end(),
              [](const HNQuotient& a, const HNQuotient& b) { return a.slope() < b.slope(); });
    bool strict = true;
    for (std::size_t i = 1; i < ladder.size(); ++i) strict = strict && ladder[i - 1].slope() < ladder[i].slope();
    if (!strict) continue;
    long degree = 0;
    for (const auto& q : ladder) degree += q.degree;
    return HNCurveBundle(rank, degree, std::move(ladder));
  }
}

HNCurveBundle random_semistable(Rng& rng, int min_rank, int max_rank, long max_deg) {
  return HNCurveBundle::semistable(static_cast<int>(uniform_int(rng, min_rank, max_rank)),
                                   uniform_int(rng, -max_deg, max_deg));
}

HNCurveBundle random_corank_one(Rng& rng, int min_rank, int max_rank, long max_deg) {
  for (;;) {
    const int rank = static_cast<int>(uniform_int(rng, std::max(min_rank, 2), max_rank));
    const HNQuotient q1{rank - 1, uniform_int(rng, -max_deg, max_deg)};
    const HNQuotient q2{1, uniform_int(rng, -max_deg, max_deg)};
    if (!(q1.slope() < q2.slope())) continue;
    return HNCurveBundle(rank, q1.degree + q2.degree, {q1, q2});
  }
}

namespace {

QVector combine(Rng& rng, const Rational& s1, const Rational& s2) {
  // Occasionally zero out a coefficient to hit the boundary.
  auto coeff = [&] { return uniform_int(rng, 0, 4) == 0 ? Rational(0) : random_nonneg_rational(rng, 12, 4); };
  const Rational a = coeff(), b = coeff(), c = coeff();
  return {a, b, c - a * s1 - b * s2};
}

}  // namespace

QVector random_psef_class(Rng& rng, const HNCurveBundle& e, const HNCurveBundle& e2) {
  return combine(rng, mu_max(e), mu_max(e2));
}

QVector random_nef_class(Rng& rng, const HNCurveBundle& e, const HNCurveBundle& e2) {
  return combine(rng, mu_min(e), mu_min(e2));
}

SurfacePreset random_rho1_preset(Rng& rng, int rank) {
  Rational l2 = random_nonneg_rational(rng, 9, 3);
  if (l2 == 0) l2 = 1;
  const Rational e = random_rational(rng, 6, 3);
  const Rational c2 = (rank - 1) * e * e * l2 / (2 * rank);
  return SurfacePreset::rho1(rank, l2, e, c2);
}

SurfacePreset random_ruled_preset(Rng& rng, int rank) {
  const Rational mu = random_rational(rng, 6, 2);
  const Rational x = random_rational(rng, 5, 2);
  const Rational y = random_rational(rng, 5, 2);
  const Rational c1_sq = 2 * mu * x * x + 2 * x * y;
  const Rational c2 = (rank - 1) * c1_sq / (2 * rank);
  return SurfacePreset::ruled(rank, mu, {x, y}, c2);
}

std::vector<QVector> random_integer_vectors(Rng& rng, int count, int dim, long bound) {
  std::vector<QVector> out;
  while (static_cast<int>(out.size()) < count) {
    QVector v(dim);
    for (auto& x : v) x = uniform_int(rng, -bound, bound);
    if (!is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace conecalc::testing
