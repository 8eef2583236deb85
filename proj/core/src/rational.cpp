#include "conecalc/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "conecalc/errors.hpp"

namespace conecalc {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"}
                                                   : text.substr(slash + 1);
  // The denominator carries no sign: "1/-2" is not a canonical rational.
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  Integer p(num_str, 10);
  Integer q(std::string(den), 10);
  if (q == 0) {
    throw InvalidInput("malformed rational '" + std::string(text) + "': zero denominator");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const QVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << to_string(v[i]);
  }
  out << ')';
  return out.str();
}

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

QVector primitive(const QVector& v) {
  if (is_zero(v)) return v;
  Integer den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& x : v) {
    Integer scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  QVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Integer scaled = x.get_num() * (den_lcm / x.get_den());
    out.emplace_back(Integer(scaled / num_gcd));
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(QMatrix& m, int ncols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = 0; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QMatrix transpose(const QMatrix& m) {
  if (m.empty()) return {};
  QMatrix t(m.front().size(), QVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

int rank(QMatrix rows) {
  if (rows.empty()) return 0;
  const int n = static_cast<int>(rows.front().size());
  return static_cast<int>(row_reduce(rows, n).size());
}

QMatrix null_space(const QMatrix& rows, int n) {
  QMatrix m = rows;
  const auto pivots = row_reduce(m, n);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  QMatrix basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVector v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

}  // namespace conecalc
