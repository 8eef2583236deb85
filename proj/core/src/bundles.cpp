#include "conecalc/bundles.hpp"

#include <numeric>
#include <sstream>

#include "conecalc/errors.hpp"

namespace conecalc {

Rational HNQuotient::slope() const {
  if (rank <= 0) throw InvalidInput("zero-rank quotient");
  return make_rational(degree, rank);
}

std::vector<std::string> validate_hn(int rank, long degree, const std::vector<HNQuotient>& ladder) {
  std::vector<std::string> errors;
  if (rank < 1) errors.emplace_back("bundle rank must be positive");
  bool zero_rank = false;
  long rank_sum = 0;
  long degree_sum = 0;
  for (const auto& q : ladder) {
    if (q.rank < 1) zero_rank = true;
    rank_sum += q.rank;
    degree_sum += q.degree;
  }
  if (zero_rank) errors.emplace_back("zero-rank quotient");
  if (rank_sum != rank) errors.emplace_back("rank sum mismatch");
  if (degree_sum != degree) errors.emplace_back("degree sum mismatch");
  if (!zero_rank) {
    for (std::size_t j = 1; j < ladder.size(); ++j) {
      if (!(ladder[j - 1].slope() < ladder[j].slope())) {
        errors.emplace_back("slopes not strictly increasing");
        break;
      }
    }
  }
  return errors;
}

HNCurveBundle::HNCurveBundle(int rank, long degree, std::vector<HNQuotient> quotients, std::string name)
    : rank_(rank), degree_(degree), quotients_(std::move(quotients)), name_(std::move(name)) {
  const auto errors = validate_hn(rank_, degree_, quotients_);
  if (!errors.empty()) {
    std::ostringstream msg;
    msg << "invalid HN ladder" << (name_.empty() ? "" : " for bundle '" + name_ + "'") << ": ";
    for (std::size_t i = 0; i < errors.size(); ++i) msg << (i ? "; " : "") << errors[i];
    throw InvalidInput(msg.str());
  }
}

HNCurveBundle HNCurveBundle::semistable(int rank, long degree, std::string name) {
  return HNCurveBundle(rank, degree, {HNQuotient{rank, degree}}, std::move(name));
}

Rational slope(const HNCurveBundle& b) { return make_rational(b.degree(), b.rank()); }
Rational mu_min(const HNCurveBundle& b) { return b.quotients().front().slope(); }
Rational mu_max(const HNCurveBundle& b) { return b.quotients().back().slope(); }

HNCurveBundle sub_bundle_after_step(const HNCurveBundle& b, int j) {
  const int k = static_cast<int>(b.quotients().size());
  if (j < 1 || j > k - 1) {
    throw InvalidInput("filtration step " + std::to_string(j) + " out of range [1, " +
                       std::to_string(k - 1) + "]");
  }
  int rank = b.rank();
  long degree = b.degree();
  for (int i = 0; i < j; ++i) {
    rank -= b.quotients()[i].rank;
    degree -= b.quotients()[i].degree;
  }
  std::vector<HNQuotient> rest(b.quotients().begin() + j, b.quotients().end());
  return HNCurveBundle(rank, degree, std::move(rest), b.name().empty() ? "" : b.name() + "_" + std::to_string(j));
}

Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

SymTwist sym_twist_c1(int r, const QVector& c1_e, int m, const QVector& c1_l) {
  if (r < 1 || m < 1) throw InvalidInput("sym_twist_c1 needs r >= 1 and m >= 1");
  if (c1_e.size() != c1_l.size()) throw DimensionMismatch("c1(E) and c1(L) live in different N^1");
  SymTwist out{binomial(m + r - 1, r - 1), {}};
  const Rational per_rank = make_rational(m, r);
  for (std::size_t i = 0; i < c1_e.size(); ++i) {
    out.c1.push_back(Rational(out.rank) * (per_rank * c1_e[i] + c1_l[i]));
  }
  return out;
}

Rational c2_end(const SurfaceBundleData& data, const QMatrix& base_pairing) {
  if (base_pairing.size() != data.c1.size()) throw DimensionMismatch("c1 does not match the base N^1");
  Rational c1_sq = 0;
  for (std::size_t i = 0; i < data.c1.size(); ++i)
    for (std::size_t j = 0; j < data.c1.size(); ++j) c1_sq += data.c1[i] * data.c1[j] * base_pairing[i][j];
  return 2 * data.rank * data.c2 - (data.rank - 1) * c1_sq;
}

}  // namespace conecalc
