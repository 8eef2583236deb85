#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc {

/// Largest ambient dimension accepted by RationalCone. Read once from the
/// CONECALC_MAX_DIM environment variable; defaults to 6.
int max_cone_dim();

/// Bilinear form <x, y> = x^T M y between two spaces of equal dimension.
class Pairing {
 public:
  explicit Pairing(QMatrix matrix);
  static Pairing standard(int n);

  int dim() const { return static_cast<int>(matrix_.size()); }
  const QMatrix& matrix() const { return matrix_; }
  Rational operator()(const QVector& x, const QVector& y) const;
  /// The linear functional <x, .> as a vector.
  QVector left(const QVector& x) const;

 private:
  QMatrix matrix_;
};

/// Finitely generated convex cone with exact rational generators.
///
/// Generators are stored as deduplicated primitive integer vectors in
/// lexicographic order. The facet description (inequalities h.x >= 0 plus
/// equations e.x = 0) is computed eagerly, so every query is read-only.
class RationalCone {
 public:
  /// Throws InvalidInput on zero generators and DimensionMismatch on wrong
  /// lengths or when `dim` exceeds max_cone_dim().
  RationalCone(int dim, std::vector<QVector> generators);

  int dim() const { return dim_; }
  const std::vector<QVector>& generators() const { return generators_; }
  const std::vector<QVector>& inequalities() const { return inequalities_; }
  const std::vector<QVector>& equations() const { return equations_; }

  bool contains(const QVector& v) const;

  /// First violated constraint, rendered as text, or nullopt if v is inside.
  std::optional<std::string> violated_constraint(const QVector& v) const;

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.dim_ == b.dim_ && a.generators_ == b.generators_;
  }

 private:
  int dim_;
  std::vector<QVector> generators_;
  std::vector<QVector> inequalities_;
  std::vector<QVector> equations_;
};

/// V-representation of {y : a.y >= 0 for every a} as a lineality basis and
/// a set of rays (extreme modulo the lineality space).
struct ConeVRep {
  std::vector<QVector> lineality;
  std::vector<QVector> rays;
};

/// Double description method on the homogeneous system a_i.y >= 0.
ConeVRep solve_inequalities(int dim, const std::vector<QVector>& inequalities);

/// {y : <g, y> >= 0 for every generator g}. The dual of the zero cone is the
/// whole space.
RationalCone dual(const RationalCone& c, const Pairing& p);
RationalCone dual(const RationalCone& c);

/// Same cone as sets; compared by mutual generator containment.
bool equals(const RationalCone& a, const RationalCone& b);

/// a is a subset of b.
bool is_subcone(const RationalCone& a, const RationalCone& b);

/// Irredundant subset of the generators (primitive, lexicographic order).
/// For pointed cones these are exactly the extremal rays.
std::vector<QVector> extremal_rays(const RationalCone& c);

}  // namespace conecalc
