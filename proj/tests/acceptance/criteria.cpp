#include "criteria.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "conecalc/cone_catalog.hpp"
#include "conecalc/cones.hpp"
#include "conecalc/errors.hpp"
#include "conecalc/intersection_ring.hpp"
#include "conecalc/zariski.hpp"
#include "oracles.hpp"

namespace conecalc::testing {

namespace {

// Each check returns an empty string on success, else a description of the
// first failure.
using Check = std::function<std::string(Rng&)>;

std::string describe(const HNCurveBundle& b) {
  std::ostringstream s;
  s << "(" << b.rank() << "," << b.degree() << ",[";
  for (std::size_t i = 0; i < b.quotients().size(); ++i)
    s << (i ? "," : "") << "(" << b.quotients()[i].rank << "," << b.quotients()[i].degree << ")";
  s << "])";
  return s.str();
}

Polynomial pow_gen(const IntersectionRing& ring, const std::string& g, int e) { return power(ring.generator(g), e); }

// 1. Fibre-product intersection table.
std::string table_fidelity(Rng&) {
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n)
      for (long d = -3; d <= 3; ++d)
        for (long d2 = -3; d2 <= 3; ++d2) {
          const IntersectionRing ring = build_fibre_product_ring(m, n, d, d2);
          const Polynomial xi = ring.generator("xi"), zeta = ring.generator("zeta"), f = ring.generator("F");
          const std::string where = " at (m,n,d,d')=(" + std::to_string(m) + "," + std::to_string(n) + "," +
                                    std::to_string(d) + "," + std::to_string(d2) + ")";
          auto vanishes = [&](const Polynomial& p) { return ring.normal_form(p).is_zero(); };
          if (!vanishes(multiply(pow_gen(ring, "xi", m), f))) return "xi^m F != 0" + where;
          if (!vanishes(multiply(pow_gen(ring, "zeta", n), f))) return "zeta^n F != 0" + where;
          if (!vanishes(pow_gen(ring, "xi", m + 1))) return "xi^(m+1) != 0" + where;
          if (!vanishes(pow_gen(ring, "zeta", n + 1))) return "zeta^(n+1) != 0" + where;
          if (!vanishes(multiply(f, f))) return "F^2 != 0" + where;
          if (ring.degree(multiply(pow_gen(ring, "zeta", n), pow_gen(ring, "xi", m - 1))) != d2)
            return "zeta^n xi^(m-1) != d'" + where;
          if (ring.degree(multiply(pow_gen(ring, "zeta", n - 1), pow_gen(ring, "xi", m))) != d)
            return "zeta^(n-1) xi^m != d" + where;
          if (!(ring.normal_form(pow_gen(ring, "zeta", n), n) ==
                ring.normal_form(scale(multiply(pow_gen(ring, "zeta", n - 1), f), Rational(Integer(d2))), n)))
            return "zeta^n != d' zeta^(n-1) F" + where;
          if (!(ring.normal_form(pow_gen(ring, "xi", m), m) ==
                ring.normal_form(scale(multiply(pow_gen(ring, "xi", m - 1), f), Rational(Integer(d))), m)))
            return "xi^m != d xi^(m-1) F" + where;
        }
  return {};
}

// 2. lambda^r vanishes exactly on the c_2(End) = 0 locus.
std::string lambda_vanishing(Rng& rng) {
  for (int r = 2; r <= 6; ++r)
    for (int t = 0; t < 50; ++t) {
      const Rational e = random_rational(rng, 8, 4);
      Rational l2 = random_nonneg_rational(rng, 9, 3);
      if (l2 == 0) l2 = 1;
      const Rational c1_sq = e * e * l2;
      const Rational c2 = (r - 1) * c1_sq / (2 * r);
      if (!verify_lambda_vanishing(r, c1_sq, c2))
        return "false on the vanishing locus: r=" + std::to_string(r) + " c1^2=" + to_string(c1_sq);
      Rational delta = random_rational(rng, 5, 3);
      if (delta == 0) delta = 1;
      if (verify_lambda_vanishing(r, c1_sq, c2 + delta))
        return "true off the vanishing locus: r=" + std::to_string(r) + " c2=" + to_string(c2 + delta);
    }
  return {};
}

// 3. Nef = psef on P(E) over a curve iff E is semistable.
std::string curve_dichotomy(Rng& rng) {
  for (int t = 0; t < 200; ++t) {
    const HNCurveBundle b = random_bundle(rng, 2, 6, 3, 10);
    if (curve_bundle_cones(b).equal != b.is_semistable()) return "dichotomy fails for " + describe(b);
  }
  return {};
}

// 4. Literal corank-one generator lists vs the uniform closed form.
std::string corank_one_cones(Rng& rng) {
  for (int t = 0; t < 100; ++t) {
    const HNCurveBundle e = random_corank_one(rng, 2, 5, 10);
    const bool both = t % 2 == 1;
    const HNCurveBundle e2 = both ? random_corank_one(rng, 2, 5, 10) : random_semistable(rng, 2, 5, 10);
    const long d1 = e.first_quotient().degree;
    QVector second;
    if (both) {
      second = {0, 1, Rational(Integer(e2.first_quotient().degree - e2.degree()))};
    } else {
      second = {0, 1, -slope(e2)};
    }
    const RationalCone literal(3, {{1, 0, Rational(Integer(d1 - e.degree()))}, second, {0, 0, 1}});
    const RationalCone closed = fibre_product_psef_cone(e, e2);
    if (!equals(literal, closed)) return "cones differ for E=" + describe(e) + " E'=" + describe(e2);
    if (!caratheodory_equal(literal.generators(), closed.generators()))
      return "oracle disagrees for E=" + describe(e) + " E'=" + describe(e2);
  }
  return {};
}

// 5. Decompose/verify round trip and order independence.
std::string zariski_round_trip(Rng& rng) {
  for (int t = 0; t < 1000; ++t) {
    const HNCurveBundle e = random_bundle(rng, 2, 5, 3, 10);
    const HNCurveBundle e2 = random_bundle(rng, 2, 5, 3, 10);
    const QVector cls = random_psef_class(rng, e, e2);
    const ZariskiCertificate cert = decompose(e, e2, cls);
    const auto reasons = verify_reasons(cert, e, e2);
    if (!cert.verified || !reasons.empty()) {
      return "verify failed for E=" + describe(e) + " E'=" + describe(e2) + " cls=" + to_string(cls) +
             (reasons.empty() ? "" : ": " + reasons.front());
    }
    for (auto order : {ReductionOrder::SecondThenFirst, ReductionOrder::Alternating}) {
      const ZariskiCertificate other = decompose(e, e2, cls, order);
      if (!verify(other, e, e2)) return "verify failed under another reduction order";
      if (other.nef_part != cert.nef_part || other.effective_part != cert.effective_part ||
          other.terminal != cert.terminal)
        return "terminal (P, N) depends on reduction order for E=" + describe(e) + " E'=" + describe(e2);
    }
  }
  return {};
}

// 6. Both factors semistable: no steps, empty N.
std::string semistable_purity(Rng& rng) {
  for (int t = 0; t < 100; ++t) {
    const HNCurveBundle e = random_semistable(rng, 2, 5, 10);
    const HNCurveBundle e2 = random_semistable(rng, 2, 5, 10);
    const QVector cls = random_nef_class(rng, e, e2);
    const ZariskiCertificate cert = decompose(e, e2, cls);
    if (!cert.steps.empty() || !cert.effective_part.empty() || cert.nef_part != cls ||
        cert.terminal != TerminalCase::BothSemistable)
      return "impure certificate for cls=" + to_string(cls);
  }
  return {};
}

// 7. k-homogeneity and agreement with the closed-form constructors.
std::string k_homogeneity(Rng& rng) {
  for (int r = 2; r <= 6; ++r)
    for (int t = 0; t < 40; ++t) {
      const SurfacePreset p = t < 20 ? random_rho1_preset(rng, r) : random_ruled_preset(rng, r);
      for (int k = 1; k < r; ++k) {
        const ConeReport check = k_homogeneity_report(p, k);
        const std::string where = std::string(t < 20 ? " (rho=1" : " (ruled") + ", r=" + std::to_string(r) +
                                  ", k=" + std::to_string(k) + ", base " + to_string(p.base_param) + ")";
        if (!check.equal) return "not k-homogeneous" + where;
        const ConeReport closed = codim_k_cones(p, k);
        if (!closed.equal) return "closed-form cones differ" + where;
        if (!equals(closed.psef, check.psef) || !equals(closed.nef, check.nef))
          return "closed form disagrees with the independent check" + where;
      }
    }
  return {};
}

// 8. Towers of semistable bundles.
std::string towers(Rng& rng) {
  for (int t = 0; t < 60; ++t) {
    const int len = static_cast<int>(uniform_int(rng, 1, 3));
    std::vector<HNCurveBundle> bundles;
    for (int i = 0; i < len; ++i) bundles.push_back(random_semistable(rng, 2, 3, 6));
    const auto reports = tower_cones(bundles);
    if (static_cast<int>(reports.size()) != len + 1) return "wrong number of stages";
    for (int j = 1; j <= len; ++j) {
      const auto& rep = reports[j];
      if (!rep.equal) return "nef != psef at stage " + std::to_string(j);
      const std::size_t expected = static_cast<std::size_t>(j - 1) + 2;
      if (rep.psef.generators().size() != expected || rep.nef.generators().size() != expected)
        return "generator count at stage " + std::to_string(j) + " is not " + std::to_string(expected);
    }
    // Converse: replace one factor by an unstable bundle.
    auto broken = bundles;
    broken[static_cast<std::size_t>(uniform_int(rng, 0, len - 1))] = random_corank_one(rng, 2, 3, 6);
    try {
      tower_cones(broken);
      return "unstable factor accepted";
    } catch (const ContractViolation&) {
    }
  }
  return {};
}

// 9. Double-description membership vs Caratheodory.
std::string cone_oracle(Rng& rng) {
  for (int t = 0; t < 500; ++t) {
    const int dim = static_cast<int>(uniform_int(rng, 1, 4));
    const int count = static_cast<int>(uniform_int(rng, 1, 6));
    const auto gens = random_integer_vectors(rng, count, dim, 3);
    const RationalCone cone(dim, gens);
    std::vector<QVector> probes = random_integer_vectors(rng, 6, dim, 4);
    // Points built inside the cone, some on the boundary.
    for (int s = 0; s < 4; ++s) {
      QVector v(dim, 0);
      for (const auto& g : gens) {
        const Rational c = uniform_int(rng, 0, 2) == 0 ? Rational(0) : random_nonneg_rational(rng, 5, 3);
        for (int i = 0; i < dim; ++i) v[i] += c * g[i];
      }
      probes.push_back(v);
    }
    for (const auto& v : probes) {
      if (cone.contains(v) != caratheodory_contains(gens, v)) return "membership disagrees at " + to_string(v);
    }
  }
  return {};
}

struct CriterionDef {
  const char* name;
  double limit;
  std::string (*run)(Rng&);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"intersection table fidelity", 1.0, table_fidelity},
    {"lambda^r vanishing", 1.0, lambda_vanishing},
    {"curve-base nef/psef dichotomy", 1.0, curve_dichotomy},
    {"corank-one psef cones", 2.0, corank_one_cones},
    {"weak Zariski round trip", 10.0, zariski_round_trip},
    {"semistable purity", 1.0, semistable_purity},
    {"k-homogeneity", 5.0, k_homogeneity},
    {"semistable towers", 1.0, towers},
    {"cone engine vs oracle", 5.0, cone_oracle},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw InvalidInput("no acceptance criterion " + std::to_string(id));
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = def.name;
  r.limit_seconds = def.limit;
  Rng rng(seed + static_cast<std::uint64_t>(id));
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = def.run(rng);
    r.correct = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriterionCount; ++i) out.push_back(run_criterion(i, seed));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s, limit %g s", r.seconds, r.limit_seconds);
  std::string line = "criterion " + std::to_string(r.id) + ": " + (r.passed() ? "PASS" : "FAIL") + " " + r.name +
                     " (" + timing + ")";
  if (!r.correct) line += " " + r.detail;
  else if (!r.passed()) line += " too slow";
  return line;
}

}  // namespace conecalc::testing
