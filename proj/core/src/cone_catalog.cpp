#include "conecalc/cone_catalog.hpp"

#include <algorithm>
#include <sstream>

#include "conecalc/errors.hpp"

namespace conecalc {

ConeReport::ConeReport(std::string space_, int k_, std::vector<std::string> basis_, RationalCone nef_,
                       RationalCone psef_)
    : space(std::move(space_)), k(k_), basis(std::move(basis_)), nef(std::move(nef_)), psef(std::move(psef_)) {
  if (nef.dim() != psef.dim() || static_cast<int>(basis.size()) != nef.dim()) {
    throw InvariantViolation(space + ": cone report with inconsistent dimensions");
  }
  if (!is_subcone(nef, psef)) throw InvariantViolation(space + ": nef cone is not inside the psef cone");
  equal = equals(nef, psef);
}

namespace {

QVector vec(std::initializer_list<Rational> xs) { return QVector(xs); }

std::string bundle_label(const HNCurveBundle& b) {
  return b.name().empty() ? "E(" + std::to_string(b.rank()) + "," + std::to_string(b.degree()) + ")" : b.name();
}

}  // namespace

ConeReport curve_bundle_cones(const HNCurveBundle& e) {
  RationalCone nef(2, {vec({1, -mu_min(e)}), vec({0, 1})});
  RationalCone psef(2, {vec({1, -mu_max(e)}), vec({0, 1})});
  return ConeReport("P(" + bundle_label(e) + ") over a curve", 1, {"xi", "f"}, std::move(nef), std::move(psef));
}

RationalCone fibre_product_nef_cone(const HNCurveBundle& e, const HNCurveBundle& e2) {
  return RationalCone(3, {vec({1, 0, -mu_min(e)}), vec({0, 1, -mu_min(e2)}), vec({0, 0, 1})});
}

RationalCone fibre_product_psef_cone(const HNCurveBundle& e, const HNCurveBundle& e2) {
  return RationalCone(3, {vec({1, 0, -mu_max(e)}), vec({0, 1, -mu_max(e2)}), vec({0, 0, 1})});
}

ConeReport fibre_product_cones(const HNCurveBundle& e, const HNCurveBundle& e2) {
  return ConeReport("P(" + bundle_label(e) + ") x_C P(" + bundle_label(e2) + ")", 1, {"xi", "zeta", "F"},
                    fibre_product_nef_cone(e, e2), fibre_product_psef_cone(e, e2));
}

RationalCone semistable_bundle_cone(const std::vector<QVector>& base_nef_generators, int base_dim) {
  std::vector<QVector> gens;
  QVector lambda(base_dim + 1, 0);
  lambda[0] = 1;
  gens.push_back(lambda);
  for (const auto& l : base_nef_generators) {
    if (static_cast<int>(l.size()) != base_dim) throw DimensionMismatch("base generator has wrong dimension");
    QVector g(base_dim + 1, 0);
    std::copy(l.begin(), l.end(), g.begin() + 1);
    gens.push_back(std::move(g));
  }
  return RationalCone(base_dim + 1, std::move(gens));
}

RationalCone lambda_to_xi_basis(const RationalCone& cone, int rank, const QVector& c1) {
  if (static_cast<int>(c1.size()) + 1 != cone.dim()) throw DimensionMismatch("c1 does not match the base N^1");
  std::vector<QVector> gens;
  for (const auto& g : cone.generators()) {
    QVector x = g;
    for (std::size_t i = 0; i < c1.size(); ++i) x[i + 1] -= g[0] * c1[i] / rank;
    gens.push_back(std::move(x));
  }
  return RationalCone(cone.dim(), std::move(gens));
}

namespace {

// All degree-`deg` products of `gens` (classes of degree 1), reduced and in
// coordinates of basis(deg). Zero products are dropped.
std::vector<QVector> degree_products(const IntersectionRing& ring, const std::vector<Polynomial>& gens, int deg) {
  std::vector<QVector> out;
  std::vector<int> exps(gens.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == gens.size()) {
      exps[i] = remaining;
      Polynomial p = monomial(Exponents(ring.generators().size(), 0));
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (exps[j] > 0) p = multiply(p, power(gens[j], exps[j]));
      QVector c = ring.coordinates(ring.normal_form(p, deg));
      if (!is_zero(c)) out.push_back(std::move(c));
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[i] = e;
      self(self, i + 1, remaining - e);
    }
  };
  rec(rec, 0, deg);
  return out;
}

}  // namespace

std::vector<ConeReport> tower_cones(const std::vector<HNCurveBundle>& bundles) {
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    if (!bundles[i].is_semistable()) {
      throw ContractViolation("bundle " + std::to_string(i + 1) + " (" + bundle_label(bundles[i]) +
                              ") is unstable; equality of nef and pseudoeffective cones over a curve forces every "
                              "factor to be semistable");
    }
  }
  std::vector<ConeReport> out;
  // The base curve: N^1 = Q with the ample point class.
  out.emplace_back("base curve", 1, std::vector<std::string>{"F"}, RationalCone(1, {vec({1})}),
                   RationalCone(1, {vec({1})}));

  std::vector<int> ranks;
  std::vector<long> degrees;
  std::vector<QVector> previous{vec({1})};  // stage generators in basis (xi1..xij, F)
  for (std::size_t j = 0; j < bundles.size(); ++j) {
    ranks.push_back(bundles[j].rank());
    degrees.push_back(bundles[j].degree());
    const int dim = static_cast<int>(j) + 2;

    // Psef: lambda of the new factor plus the pulled-back previous generators.
    std::vector<QVector> psef_gens;
    QVector lambda(dim, 0);
    lambda[j] = 1;
    lambda[dim - 1] = -slope(bundles[j]);
    psef_gens.push_back(lambda);
    for (const auto& g : previous) {
      QVector pulled(dim, 0);
      for (std::size_t i = 0; i + 1 < g.size(); ++i) pulled[i] = g[i];
      pulled[dim - 1] = g.back();
      psef_gens.push_back(std::move(pulled));
    }

    const IntersectionRing ring = build_tower_ring(ranks, degrees);
    std::vector<Polynomial> divisors;
    for (const auto& g : psef_gens) {
      Polynomial p;
      for (int i = 0; i < dim; ++i) p = add(p, scale(ring.generator(ring.generators()[i].name), g[i]));
      divisors.push_back(std::move(p));
    }
    const auto curves = degree_products(ring, divisors, ring.dim() - 1);
    // Curves sit on the left of the pairing.
    const RationalCone curve_cone(dim, curves);
    const RationalCone nef = dual(curve_cone, Pairing(transpose(ring.pairing_matrix(1))));

    std::vector<std::string> basis;
    for (int i = 0; i + 1 < dim; ++i) basis.push_back("xi" + std::to_string(i + 1));
    basis.push_back("F");
    out.emplace_back("fibre product tower stage " + std::to_string(j + 1), 1, std::move(basis), nef,
                     RationalCone(dim, psef_gens));
    previous = psef_gens;
  }
  return out;
}

std::vector<QVector> base_nef_generators(const SurfacePreset& preset) {
  if (preset.kind == SurfaceKind::Rho1) return {vec({1})};
  return {vec({1, -preset.base_param}), vec({0, 1})};
}

namespace {

std::string surface_space_name(const SurfacePreset& p) {
  std::ostringstream s;
  s << "P(E) over " << (p.kind == SurfaceKind::Rho1 ? "a Picard-rank-one surface" : "a ruled surface")
    << ", rank " << p.rank;
  return s.str();
}

void check_k(const SurfacePreset& preset, int k) {
  if (k < 1 || k >= preset.rank) {
    throw InvalidInput("codimension k = " + std::to_string(k) + " out of range [1, " +
                       std::to_string(preset.rank - 1) + "]");
  }
}

// Closed-form generators of psef^j as polynomials in the lambda ring.
std::vector<Polynomial> closed_form_generators(const IntersectionRing& ring, const SurfacePreset& preset, int j) {
  const auto labels = preset.base_labels();
  const Polynomial lambda = ring.generator("lambda");
  std::vector<Polynomial> base;
  for (const auto& g : base_nef_generators(preset)) {
    Polynomial p;
    for (std::size_t i = 0; i < labels.size(); ++i) p = add(p, scale(ring.generator(labels[i]), g[i]));
    base.push_back(std::move(p));
  }
  std::vector<Polynomial> out;
  if (j <= preset.rank - 1) out.push_back(power(lambda, j));
  for (const auto& b : base) out.push_back(multiply(power(lambda, j - 1), b));
  if (j >= 2) out.push_back(multiply(power(lambda, j - 2), ring.generator("F")));
  return out;
}

std::vector<QVector> to_coordinates(const IntersectionRing& ring, const std::vector<Polynomial>& ps, int j) {
  std::vector<QVector> out;
  for (const auto& p : ps) {
    QVector c = ring.coordinates(ring.normal_form(p, j));
    if (!is_zero(c)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

ConeReport codim_k_cones(const SurfacePreset& preset, int k) {
  check_k(preset, k);
  const IntersectionRing ring = build_lambda_ring_surface(preset);
  const int complementary = ring.dim() - k;
  const auto psef_gens = to_coordinates(ring, closed_form_generators(ring, preset, k), k);
  const auto dual_gens = to_coordinates(ring, closed_form_generators(ring, preset, complementary), complementary);
  const int n = static_cast<int>(ring.basis(k).size());
  const RationalCone complementary_cone(static_cast<int>(ring.basis(complementary).size()), dual_gens);
  // nef^k = {x : <x, y> >= 0 for y in psef^{dim-k}}: dualize through the
  // transposed pairing so that generators of the complementary cone sit on the left.
  const QMatrix m = ring.pairing_matrix(k);
  RationalCone nef = dual(complementary_cone, Pairing(transpose(m)));
  return ConeReport(surface_space_name(preset), k, ring.basis_labels(k), std::move(nef),
                    RationalCone(n, psef_gens));
}

ConeReport codim_k_cones_rho1(int r, int k, const Rational& l2) {
  return codim_k_cones(SurfacePreset::rho1(r, l2, 0, 0), k);
}

ConeReport codim_k_cones_ruled(int r, int k, const Rational& mu) {
  return codim_k_cones(SurfacePreset::ruled(r, mu, {Rational(0), Rational(0)}, 0), k);
}

ConeReport k_homogeneity_report(const SurfacePreset& preset, int k) {
  check_k(preset, k);
  const IntersectionRing ring = build_lambda_ring_surface(preset);
  const auto labels = preset.base_labels();
  std::vector<Polynomial> divisors{ring.generator("lambda")};
  for (const auto& g : base_nef_generators(preset)) {
    Polynomial p;
    for (std::size_t i = 0; i < labels.size(); ++i) p = add(p, scale(ring.generator(labels[i]), g[i]));
    divisors.push_back(std::move(p));
  }
  const int complementary = ring.dim() - k;
  const int n = static_cast<int>(ring.basis(k).size());
  const RationalCone psef(n, degree_products(ring, divisors, k));
  const RationalCone psef_complementary(static_cast<int>(ring.basis(complementary).size()),
                                        degree_products(ring, divisors, complementary));
  const QMatrix m = ring.pairing_matrix(k);
  RationalCone nef = dual(psef_complementary, Pairing(transpose(m)));
  return ConeReport(surface_space_name(preset), k, ring.basis_labels(k), std::move(nef), psef);
}

bool is_k_homogeneous(const SurfacePreset& preset, int k) { return k_homogeneity_report(preset, k).equal; }

}  // namespace conecalc
