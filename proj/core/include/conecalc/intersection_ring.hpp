#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc {

/// Exponent vector over a ring's generator list.
using Exponents = std::vector<int>;

/// Formal rational combination of generator monomials (not reduced).
using Polynomial = std::map<Exponents, Rational>;

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, const Rational& s);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial power(const Polynomial& a, int e);
Polynomial monomial(const Exponents& e, const Rational& coeff = 1);

/// Ring homomorphism on formal polynomials: generator i is sent to images[i],
/// a polynomial over `width` target generators.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images, std::size_t width);

struct Generator {
  std::string name;
  int degree = 1;
};

/// lhs -> rhs. Every rhs monomial must be lexicographically smaller than lhs
/// and of the same weighted degree.
struct RewriteRule {
  Exponents lhs;
  Polynomial rhs;
};

/// A numerical class: homogeneous of `degree`, keyed by normal-form monomials.
struct NumClass {
  int degree = 0;
  std::map<Exponents, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const NumClass&, const NumClass&) = default;
};

/// How normal_form picks among several applicable rules.
enum class RuleChoice {
  HighestExponent,  ///< the rule whose lhs has the largest single exponent
  Random,           ///< uniformly at random (confluence testing)
};

/// Numerical ring N(X) presented by generators, monomial rewrite rules and a
/// top-degree monomial of degree 1. Immutable after construction.
class IntersectionRing {
 public:
  IntersectionRing(std::string name, std::vector<Generator> generators, std::vector<RewriteRule> rules,
                   Exponents top, int dim);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const Exponents& top_monomial() const { return top_; }

  /// Index of a generator by name; throws InvalidInput if unknown.
  std::size_t generator_index(std::string_view name) const;
  Polynomial generator(std::string_view name) const;

  int weighted_degree(const Exponents& e) const;

  /// Normal-form monomials of degree k, in published (descending lex) order.
  const std::vector<Exponents>& basis(int k) const;
  std::vector<std::string> basis_labels(int k) const;

  /// Reduces `expr` to its unique normal form. Throws DegreeMismatch if the
  /// expression is not homogeneous, or if `degree` is given and differs.
  NumClass normal_form(const Polynomial& expr, std::optional<int> degree = std::nullopt,
                       RuleChoice choice = RuleChoice::HighestExponent,
                       std::mt19937_64* rng = nullptr) const;
  NumClass normal_form(const NumClass& cls) const;

  /// Top-degree evaluation; throws DegreeMismatch unless cls.degree == dim.
  Rational degree(const NumClass& cls) const;
  Rational degree(const Polynomial& expr) const;

  NumClass product(const NumClass& a, const NumClass& b) const;

  QVector coordinates(const NumClass& cls) const;
  NumClass from_coordinates(int k, const QVector& coords) const;

  /// Matrix of the pairing N^k x N^{dim-k} -> Q on the published bases.
  QMatrix pairing_matrix(int k) const;

  std::string monomial_label(const Exponents& e) const;
  std::string to_string(const NumClass& cls) const;

  /// Parses "xi^2*zeta - 3/2*(xi - F)^2" style expressions over the ring's
  /// generator names.
  Polynomial parse(std::string_view expr) const;

 private:
  std::string name_;
  std::vector<Generator> generators_;
  std::vector<RewriteRule> rules_;
  Exponents top_;
  int dim_;
  std::vector<std::vector<Exponents>> bases_;

  bool is_normal(const Exponents& e) const;
};

// ---------------------------------------------------------------------------
// Presets

/// P(E) over a curve, E of rank r and degree d. Generators xi, f.
struct CurveBundlePreset {
  int rank = 2;
  long degree = 0;
};

/// P(E) x_C P(E') over a curve. Generators xi, zeta, F.
struct FibreProductPreset {
  int m = 2;
  int n = 2;
  long d = 0;
  long d2 = 0;
};

enum class SurfaceKind { Rho1, Ruled };

/// P(E) over a surface with c_2(End E) = 0. For Rho1 the base N^1 is spanned
/// by the ample generator L with L^2 = base_param; for Ruled the base is
/// P_C(G), G semistable of rank 2 and slope mu = base_param, with N^1 basis
/// (eta, f), eta^2 = 2 mu, eta.f = 1, f^2 = 0.
struct SurfacePreset {
  SurfaceKind kind = SurfaceKind::Rho1;
  int rank = 2;
  Rational base_param = 1;
  QVector c1;
  Rational c2 = 0;

  /// Validating constructors; throw InvalidPreset.
  static SurfacePreset rho1(int rank, const Rational& l2, const Rational& c1, const Rational& c2);
  static SurfacePreset ruled(int rank, const Rational& mu, const QVector& c1, const Rational& c2);

  std::vector<std::string> base_labels() const;
  QMatrix base_pairing() const;
};

using SpacePreset = std::variant<CurveBundlePreset, FibreProductPreset, SurfacePreset>;

/// Checks the documented invariants of a preset; throws InvalidPreset.
void validate_preset(const SpacePreset& preset);

IntersectionRing build_curve_bundle_ring(int r, long d);
IntersectionRing build_fibre_product_ring(int m, int n, long d, long d2);

/// Iterated fibre product P(E_1) x_C ... x_C P(E_k), generators xi1..xik, F.
IntersectionRing build_tower_ring(const std::vector<int>& ranks, const std::vector<long>& degrees);

/// P(E) over a surface in the xi-basis: xi, pullbacks of the base N^1 basis,
/// and the fibre class F (degree 2). Uses the Grothendieck relation
/// xi^r = c1 xi^{r-1} - c2 xi^{r-2} F. No c_2(End) condition is imposed.
IntersectionRing build_surface_xi_ring(int r, const std::vector<std::string>& base_labels,
                                       const QMatrix& base_pairing, const QVector& c1, const Rational& c2);
IntersectionRing build_surface_xi_ring(const SurfacePreset& preset);

/// The same space in the lambda-basis, lambda = xi - c1/r, valid only when
/// c_2(End E) = 0 (then lambda^r = 0). Throws InvalidPreset otherwise.
IntersectionRing build_lambda_ring_surface(const SurfacePreset& preset);

/// Expands (xi - c1/r)^r in the xi-basis over a base whose N^1 is spanned by
/// c1 itself with c1.c1 = c1_sq, and reports whether the result vanishes.
bool verify_lambda_vanishing(int r, const Rational& c1_sq, const Rational& c2);

/// Images of the lambda-ring generators in the xi-ring (lambda -> xi - c1/r,
/// base classes and F to themselves).
std::vector<Polynomial> lambda_to_xi_images(const SurfacePreset& preset, const IntersectionRing& xi_ring);

}  // namespace conecalc
