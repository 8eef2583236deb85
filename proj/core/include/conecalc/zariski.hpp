#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conecalc/bundles.hpp"
#include "conecalc/rational.hpp"

namespace conecalc {

/// Weak Zariski decompositions on P(E) x_C P(E') over a curve. Classes are
/// coordinate vectors (a, b, c) in the basis (xi, zeta, F).

enum class Factor { First, Second };

/// One blow-up along P(Q_1) of a factor whose minimal-slope quotient has
/// corank at least two. The factor is replaced by its subbundle E_1 and the
/// exceptional divisor enters with multiplicity equal to the factor's
/// tautological coefficient.
struct ReductionStep {
  Factor factor = Factor::First;
  HNCurveBundle from_bundle;
  HNCurveBundle to_bundle;
  int center_rank = 0;  // rank of the blown-up quotient Q_1
  Rational multiplicity;

  friend bool operator==(const ReductionStep& a, const ReductionStep& b) {
    return a.factor == b.factor && a.from_bundle == b.from_bundle && a.to_bundle == b.to_bundle &&
           a.center_rank == b.center_rank && a.multiplicity == b.multiplicity;
  }
};

/// Shape of the pair once no factor admits a reduction step. A factor is
/// terminal when it is semistable or its quotient Q_1 has corank one.
enum class TerminalCase { BothSemistable, FirstCorankOne, SecondCorankOne, BothCorankOne };

std::string to_string(TerminalCase c);
TerminalCase parse_terminal_case(const std::string& name);
std::string to_string(Factor f);
Factor parse_factor(const std::string& name);

struct EffectiveTerm {
  QVector generator;
  Rational coefficient;
  friend bool operator==(const EffectiveTerm&, const EffectiveTerm&) = default;
};

struct ZariskiCertificate {
  QVector input;
  std::vector<ReductionStep> steps;
  TerminalCase terminal = TerminalCase::BothSemistable;
  QVector nef_part;
  std::vector<EffectiveTerm> effective_part;
  bool verified = false;

  /// Sum of the effective terms as a class.
  QVector effective_class() const;
  friend bool operator==(const ZariskiCertificate& a, const ZariskiCertificate& b) {
    return a.input == b.input && a.steps == b.steps && a.terminal == b.terminal && a.nef_part == b.nef_part &&
           a.effective_part == b.effective_part && a.verified == b.verified;
  }
};

enum class ReductionOrder {
  FirstThenSecond,  // default, deterministic certificates
  SecondThenFirst,
  Alternating,
};

/// Relabeling of N^1 along a reduction step. The identity on (a, b, c).
QVector coordinate_transport(const QVector& cls);

/// True if `e` admits a reduction step (rank Q_1 <= rank - 2).
bool reducible(const HNCurveBundle& e);

/// One reduction step on the chosen factor. Returns nullopt when that factor
/// is already terminal. Throws NotPseudoeffective if cls is outside the
/// psef cone of the pair.
std::optional<std::pair<ReductionStep, QVector>> reduce_step(const HNCurveBundle& e, const HNCurveBundle& e2,
                                                            Factor factor, const QVector& cls);

struct TerminalSplit {
  TerminalCase terminal;
  QVector nef_part;
  std::vector<EffectiveTerm> effective_part;
};

/// Split for a terminal pair. Throws InvalidInput if a factor is reducible
/// and NotPseudoeffective if cls is outside the psef cone.
TerminalSplit terminal_decompose(const HNCurveBundle& e, const HNCurveBundle& e2, const QVector& cls);

/// Full decomposition with certificate; `verified` is filled by verify().
ZariskiCertificate decompose(const HNCurveBundle& e, const HNCurveBundle& e2, const QVector& cls,
                             ReductionOrder order = ReductionOrder::FirstThenSecond);

/// Independent re-check of a certificate. Empty result means valid.
std::vector<std::string> verify_reasons(const ZariskiCertificate& cert, const HNCurveBundle& e,
                                        const HNCurveBundle& e2);
bool verify(const ZariskiCertificate& cert, const HNCurveBundle& e, const HNCurveBundle& e2);

/// Certificates for every extremal ray of the psef cone of the pair.
std::vector<std::pair<QVector, ZariskiCertificate>> extremal_ray_decompositions(const HNCurveBundle& e,
                                                                               const HNCurveBundle& e2);

}  // namespace conecalc
