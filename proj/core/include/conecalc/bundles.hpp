#pragma once

#include <string>
#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc {

/// One Harder-Narasimhan quotient Q_j = E_{j-1}/E_j of a bundle on a curve.
struct HNQuotient {
  int rank = 0;
  long degree = 0;

  Rational slope() const;
  friend bool operator==(const HNQuotient&, const HNQuotient&) = default;
};

/// Numerical data of a vector bundle on a smooth projective curve together
/// with its Harder-Narasimhan ladder.
///
/// Quotients are stored minimal slope first: Q_1 = E/E_1 comes first and the
/// last entry is the maximal destabilizing subbundle E_{k-1}. Slopes are
/// therefore strictly increasing in storage order. A ladder of length one
/// means the bundle is semistable.
class HNCurveBundle {
 public:
  /// Validates the ladder; throws InvalidInput listing every violation.
  HNCurveBundle(int rank, long degree, std::vector<HNQuotient> quotients, std::string name = {});

  static HNCurveBundle semistable(int rank, long degree, std::string name = {});

  int rank() const { return rank_; }
  long degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::vector<HNQuotient>& quotients() const { return quotients_; }
  bool is_semistable() const { return quotients_.size() == 1; }

  /// Q_1, the minimal-slope quotient.
  const HNQuotient& first_quotient() const { return quotients_.front(); }

  friend bool operator==(const HNCurveBundle& a, const HNCurveBundle& b) {
    return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.quotients_ == b.quotients_;
  }

 private:
  int rank_;
  long degree_;
  std::vector<HNQuotient> quotients_;
  std::string name_;
};

Rational slope(const HNCurveBundle& b);
Rational mu_min(const HNCurveBundle& b);
Rational mu_max(const HNCurveBundle& b);

/// Returns every violation of the HN ladder conditions; empty means valid.
/// Messages: "zero-rank quotient", "rank sum mismatch", "degree sum mismatch",
/// "slopes not strictly increasing".
std::vector<std::string> validate_hn(int rank, long degree, const std::vector<HNQuotient>& ladder);

/// The subbundle E_j of the filtration, 1 <= j <= k-1, with the truncated ladder.
HNCurveBundle sub_bundle_after_step(const HNCurveBundle& b, int j);

struct SymTwist {
  Integer rank;
  QVector c1;
};

/// Rank and first Chern class of Sym^m(E) (x) L for E of rank r.
/// Chern classes are coordinates in any fixed basis of N^1 of the base.
SymTwist sym_twist_c1(int r, const QVector& c1_e, int m, const QVector& c1_l);

/// Numerical data of a bundle on a surface. `c1` is in the coordinates of the
/// base's N^1 basis; the base intersection form is passed where needed.
struct SurfaceBundleData {
  int rank = 2;
  QVector c1;
  Rational c2;
  bool semistable = true;
};

/// c_2(End E) = 2r c_2 - (r-1) c_1^2, with c_1^2 taken in `base_pairing`.
Rational c2_end(const SurfaceBundleData& data, const QMatrix& base_pairing);

Integer binomial(long n, long k);

}  // namespace conecalc
