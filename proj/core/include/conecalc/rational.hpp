#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace conecalc {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Always kept canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

/// Parses "p", "-p" or "p/q". Rejects zero denominators, whitespace and
/// trailing garbage with InvalidInput.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
std::string to_string(const Rational& value);
std::string to_string(const QVector& v);

Rational make_rational(long num, long den = 1);

Rational dot(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);

/// Scales v by a positive rational so that all entries are integers with
/// gcd 1. The zero vector is returned unchanged.
QVector primitive(const QVector& v);

QMatrix transpose(const QMatrix& m);

/// Rank of a matrix given as a list of rows.
int rank(QMatrix rows);

/// Basis of {x : row . x = 0 for every row}, `n` = ambient dimension.
QMatrix null_space(const QMatrix& rows, int n);

}  // namespace conecalc
