#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conecalc/bundles.hpp"
#include "conecalc/intersection_ring.hpp"
#include "conecalc/rational.hpp"

namespace conecalc::cli {

enum class BaseKind { Curve, SurfaceRho1, RuledSurface };
enum class SpaceKind { ProjectiveBundle, FibreProduct, Tower };

/// Chern data of a bundle on a surface; c1 in the base N^1 basis
/// ((L) for Picard rank one, (eta, f) for a ruled surface).
struct SurfaceBundle {
  std::string name;
  int rank = 2;
  QVector c1;
  Rational c2;
};

using BundleEntry = std::variant<HNCurveBundle, SurfaceBundle>;

struct WorkspaceSpec {
  BaseKind base = BaseKind::Curve;
  Rational base_param;  // L^2 or mu; unused for curves
  std::map<std::string, BundleEntry> bundles;
  SpaceKind space = SpaceKind::FibreProduct;
  std::vector<std::string> factors;
  std::map<std::string, QVector> classes;

  std::vector<HNCurveBundle> curve_factors() const;
  const SurfaceBundle& surface_factor() const;
  /// Lambda-ring preset; throws InvalidPreset unless c_2(End E) = 0.
  SurfacePreset surface_preset() const;

  /// Ring of the selected space. Surfaces use the xi-basis unless
  /// `lambda_basis` is set.
  IntersectionRing ring(bool lambda_basis = false) const;
  /// Labels of N^1 in the order class coordinates are given.
  std::vector<std::string> divisor_basis() const;
  std::string describe_space() const;
};

/// Parses and validates a workspace document. Schema errors throw
/// InvalidInput with a JSON path such as "$.bundles[1].hn[0]".
WorkspaceSpec parse_workspace(std::string_view text);
WorkspaceSpec load_workspace(const std::string& path);

}  // namespace conecalc::cli
