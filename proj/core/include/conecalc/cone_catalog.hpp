#pragma once

#include <string>
#include <vector>

#include "conecalc/bundles.hpp"
#include "conecalc/cones.hpp"
#include "conecalc/intersection_ring.hpp"

namespace conecalc {

/// Nef and pseudoeffective cones of one space in one codimension, expressed
/// in the published basis of N^k. Construction checks nef is inside psef.
struct ConeReport {
  std::string space;
  int k = 1;
  std::vector<std::string> basis;
  RationalCone nef;
  RationalCone psef;
  bool equal = false;

  ConeReport(std::string space, int k, std::vector<std::string> basis, RationalCone nef, RationalCone psef);
};

/// P(E) over a curve in the basis (xi, f): nef = <xi - mu_min f, f>,
/// psef = <xi - mu_max f, f>. Equal iff E is semistable.
ConeReport curve_bundle_cones(const HNCurveBundle& e);

/// Nef cone of P(E) x_C P(E') in the basis (xi, zeta, F):
/// <xi - mu_min(E) F, zeta - mu_min(E') F, F>.
RationalCone fibre_product_nef_cone(const HNCurveBundle& e, const HNCurveBundle& e2);

/// Pseudoeffective cone of P(E) x_C P(E'):
/// <xi - mu_max(E) F, zeta - mu_max(E') F, F>.
///
/// For a corank-one destabilizing quotient (rank E_1 = 1) the first ray is
/// the class of P(Q_1), xi + (d_1 - d) F. Deeper ladders reduce to that case
/// through the blow-up cone maps, which act as the identity on coordinates.
RationalCone fibre_product_psef_cone(const HNCurveBundle& e, const HNCurveBundle& e2);

ConeReport fibre_product_cones(const HNCurveBundle& e, const HNCurveBundle& e2);

/// Divisor cone of P(E) for E semistable with c_2(End E) = 0 over a base
/// whose nef and pseudoeffective cones agree and are generated by
/// `base_nef_generators` (coordinates in a fixed base N^1 basis of size p).
/// Result lives in the basis (lambda, pi^*B_1, ..., pi^*B_p). The base
/// hypothesis is the caller's responsibility.
RationalCone semistable_bundle_cone(const std::vector<QVector>& base_nef_generators, int base_dim);

/// Re-expresses a cone from the (lambda, pi^*B) basis in the (xi, pi^*B)
/// basis using lambda = xi - c1/r.
RationalCone lambda_to_xi_basis(const RationalCone& cone, int rank, const QVector& c1);

/// Divisor cones on the stages of P(E_1) x_C ... x_C P(E_k) over a curve.
/// Entry 0 is the base curve; entry j describes X_j in the basis
/// (xi1, ..., xij, F). Nef is computed as the dual of the curve classes
/// obtained as products of the generating divisors. Throws
/// ContractViolation if any bundle is unstable.
std::vector<ConeReport> tower_cones(const std::vector<HNCurveBundle>& bundles);

/// Codimension-k cones of P(E) over a surface (c_2(End E) = 0) from the
/// closed-form generator lists, 1 <= k < r. For k >= 2 the psef generators are
/// lambda^k, lambda^{k-1} pi^*(base nef gens), lambda^{k-2} F; for k = 1 the
/// divisor generators lambda, pi^*(base nef gens). Nef is the dual of the
/// closed-form complementary cone under the ring pairing.
ConeReport codim_k_cones(const SurfacePreset& preset, int k);
ConeReport codim_k_cones_rho1(int r, int k, const Rational& l2);
ConeReport codim_k_cones_ruled(int r, int k, const Rational& mu);

/// Independent check of Eff^k = Nef^k: psef^j is spanned by all degree-j
/// products of the nef divisor generators (lambda and the base nef
/// generators), nef^k is the dual of psef^{dim-k}. Throws InvalidInput for
/// k outside [1, r-1].
ConeReport k_homogeneity_report(const SurfacePreset& preset, int k);
bool is_k_homogeneous(const SurfacePreset& preset, int k);

/// Nef generators of the base surface in its N^1 basis.
std::vector<QVector> base_nef_generators(const SurfacePreset& preset);

}  // namespace conecalc
