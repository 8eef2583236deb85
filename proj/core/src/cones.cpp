#include "conecalc/cones.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "conecalc/errors.hpp"

namespace conecalc {

int max_cone_dim() {
  static const int cap = [] {
    const char* env = std::getenv("CONECALC_MAX_DIM");
    if (env == nullptr || *env == '\0') return 6;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) return 6;
    return static_cast<int>(v);
  }();
  return cap;
}

Pairing::Pairing(QMatrix matrix) : matrix_(std::move(matrix)) {
  for (const auto& row : matrix_)
    if (row.size() != matrix_.size()) throw DimensionMismatch("pairing matrix must be square");
}

Pairing Pairing::standard(int n) {
  QMatrix m(n, QVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return Pairing(std::move(m));
}

QVector Pairing::left(const QVector& x) const {
  if (static_cast<int>(x.size()) != dim()) throw DimensionMismatch("pairing argument has wrong dimension");
  QVector out(dim(), 0);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) out[j] += x[i] * matrix_[i][j];
  return out;
}

Rational Pairing::operator()(const QVector& x, const QVector& y) const { return dot(left(x), y); }

// ---------------------------------------------------------------------------
// Double description

namespace {

QVector combine(const Rational& a, const QVector& x, const Rational& b, const QVector& y) {
  QVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

}  // namespace

ConeVRep solve_inequalities(int dim, const std::vector<QVector>& inequalities) {
  ConeVRep rep;
  for (int i = 0; i < dim; ++i) {
    QVector e(dim, 0);
    e[i] = 1;
    rep.lineality.push_back(std::move(e));
  }
  std::vector<QVector> processed;

  for (const auto& a : inequalities) {
    if (static_cast<int>(a.size()) != dim) throw DimensionMismatch("inequality has wrong dimension");
    if (is_zero(a)) continue;

    auto pivot = std::find_if(rep.lineality.begin(), rep.lineality.end(),
                              [&](const QVector& b) { return dot(a, b) != 0; });
    if (pivot != rep.lineality.end()) {
      // The constraint cuts the lineality space: b0 turns into a ray and the
      // rest of the lineality and all rays are projected onto a.y = 0.
      QVector b0 = *pivot;
      rep.lineality.erase(pivot);
      Rational ab0 = dot(a, b0);
      if (ab0 < 0) {
        for (auto& x : b0) x = -x;
        ab0 = -ab0;
      }
      for (auto& b : rep.lineality) b = primitive(combine(1, b, -dot(a, b) / ab0, b0));
      for (auto& r : rep.rays) r = primitive(combine(1, r, -dot(a, r) / ab0, b0));
      rep.rays.push_back(primitive(b0));
      processed.push_back(a);
      continue;
    }

    std::vector<QVector> pos, zero, neg;
    for (auto& r : rep.rays) {
      const Rational s = dot(a, r);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(std::move(r));
    }
    std::vector<QVector> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    if (!neg.empty() && !pos.empty()) {
      const int full_rank = rank(processed);
      for (const auto& p : pos) {
        for (const auto& n : neg) {
          // Combinatorial adjacency: the constraints tight at both rays must
          // have rank two less than the whole system.
          QMatrix common;
          for (const auto& c : processed)
            if (dot(c, p) == 0 && dot(c, n) == 0) common.push_back(c);
          if (rank(common) != full_rank - 2) continue;
          next.push_back(primitive(combine(dot(a, p), n, -dot(a, n), p)));
        }
      }
    }
    rep.rays = std::move(next);
    processed.push_back(a);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// RationalCone

namespace {

std::vector<QVector> canonical_generators(int dim, std::vector<QVector> gens) {
  std::set<QVector> seen;
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != dim) {
      throw DimensionMismatch("generator " + to_string(g) + " is not in dimension " + std::to_string(dim));
    }
    if (is_zero(g)) throw InvalidInput("zero vector is not a valid cone generator");
    seen.insert(primitive(g));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

RationalCone::RationalCone(int dim, std::vector<QVector> generators) : dim_(dim) {
  if (dim < 1) throw DimensionMismatch("cone dimension must be positive");
  if (dim > max_cone_dim()) {
    throw DimensionMismatch("cone dimension " + std::to_string(dim) + " exceeds CONECALC_MAX_DIM = " +
                            std::to_string(max_cone_dim()));
  }
  generators_ = canonical_generators(dim, std::move(generators));
  // C = C**: the facet normals of C are the generators of its dual.
  const ConeVRep dual_rep = solve_inequalities(dim_, generators_);
  std::set<QVector> ineq(dual_rep.rays.begin(), dual_rep.rays.end());
  inequalities_.assign(ineq.begin(), ineq.end());
  equations_ = dual_rep.lineality;
}

bool RationalCone::contains(const QVector& v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " tested against a cone in dimension " +
                            std::to_string(dim_));
  }
  return std::all_of(equations_.begin(), equations_.end(), [&](const QVector& e) { return dot(e, v) == 0; }) &&
         std::all_of(inequalities_.begin(), inequalities_.end(), [&](const QVector& h) { return dot(h, v) >= 0; });
}

std::optional<std::string> RationalCone::violated_constraint(const QVector& v) const {
  if (static_cast<int>(v.size()) != dim_) throw DimensionMismatch("vector dimension does not match cone");
  for (const auto& e : equations_) {
    const Rational s = dot(e, v);
    if (s != 0) return to_string(e) + " . x = " + to_string(s) + " != 0";
  }
  for (const auto& h : inequalities_) {
    const Rational s = dot(h, v);
    if (s < 0) return to_string(h) + " . x = " + to_string(s) + " < 0";
  }
  return std::nullopt;
}

RationalCone dual(const RationalCone& c, const Pairing& p) {
  if (p.dim() != c.dim()) throw DimensionMismatch("pairing dimension does not match cone");
  std::vector<QVector> functionals;
  for (const auto& g : c.generators()) functionals.push_back(p.left(g));
  const ConeVRep rep = solve_inequalities(c.dim(), functionals);
  std::vector<QVector> gens = rep.rays;
  for (const auto& b : rep.lineality) {
    gens.push_back(b);
    QVector neg = b;
    for (auto& x : neg) x = -x;
    gens.push_back(std::move(neg));
  }
  return RationalCone(c.dim(), std::move(gens));
}

RationalCone dual(const RationalCone& c) { return dual(c, Pairing::standard(c.dim())); }

bool is_subcone(const RationalCone& a, const RationalCone& b) {
  if (a.dim() != b.dim()) return false;
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const QVector& g) { return b.contains(g); });
}

bool equals(const RationalCone& a, const RationalCone& b) { return is_subcone(a, b) && is_subcone(b, a); }

std::vector<QVector> extremal_rays(const RationalCone& c) {
  std::vector<QVector> kept = c.generators();
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<QVector> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (RationalCone(c.dim(), others).contains(kept[i])) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return kept;
}

}  // namespace conecalc
