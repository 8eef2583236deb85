#include "conecalc/zariski.hpp"

#include "conecalc/cone_catalog.hpp"
#include "conecalc/cones.hpp"
#include "conecalc/errors.hpp"

namespace conecalc {

namespace {

const char* const kTerminalNames[] = {"both_semistable", "first_corank_one", "second_corank_one",
                                      "both_corank_one"};

void check_class(const QVector& cls) {
  if (cls.size() != 3) {
    throw DimensionMismatch("class has " + std::to_string(cls.size()) + " coordinates; expected 3 (xi, zeta, F)");
  }
}

// The psef cone is <xi - M F, zeta - M' F, F> with M, M' the maximal slopes;
// its facet functionals are a, b and c + a M + b M'.
Rational f_coefficient(const HNCurveBundle& e, const HNCurveBundle& e2, const QVector& cls) {
  return cls[2] + cls[0] * mu_max(e) + cls[1] * mu_max(e2);
}

void require_psef(const HNCurveBundle& e, const HNCurveBundle& e2, const QVector& cls) {
  check_class(cls);
  const std::string where = "class " + to_string(cls) + " is not pseudoeffective: ";
  if (cls[0] < 0) throw NotPseudoeffective(where + "xi-coefficient a = " + to_string(cls[0]) + " < 0");
  if (cls[1] < 0) throw NotPseudoeffective(where + "zeta-coefficient b = " + to_string(cls[1]) + " < 0");
  const Rational c = f_coefficient(e, e2, cls);
  if (c < 0) {
    throw NotPseudoeffective(where + "c + a*mu_max(E) + b*mu_max(E') = " + to_string(c) + " < 0");
  }
}

bool corank_one(const HNCurveBundle& e) {
  return !e.is_semistable() && e.first_quotient().rank == e.rank() - 1;
}

QVector tautological_ray(const HNCurveBundle& e, int index) {
  QVector g(3, 0);
  g[index] = 1;
  g[2] = -mu_max(e);
  return g;
}

}  // namespace

std::string to_string(TerminalCase c) { return kTerminalNames[static_cast<int>(c)]; }

TerminalCase parse_terminal_case(const std::string& name) {
  for (int i = 0; i < 4; ++i)
    if (name == kTerminalNames[i]) return static_cast<TerminalCase>(i);
  throw InvalidInput("unknown terminal case '" + name + "'");
}

std::string to_string(Factor f) { return f == Factor::First ? "first" : "second"; }

Factor parse_factor(const std::string& name) {
  if (name == "first") return Factor::First;
  if (name == "second") return Factor::Second;
  throw InvalidInput("unknown factor '" + name + "'");
}

QVector ZariskiCertificate::effective_class() const {
  QVector sum(input.size(), 0);
  for (const auto& t : effective_part)
    for (std::size_t i = 0; i < sum.size() && i < t.generator.size(); ++i) sum[i] += t.coefficient * t.generator[i];
  return sum;
}

QVector coordinate_transport(const QVector& cls) {
  check_class(cls);
  return cls;
}

bool reducible(const HNCurveBundle& e) { return !e.is_semistable() && e.first_quotient().rank <= e.rank() - 2; }

std::optional<std::pair<ReductionStep, QVector>> reduce_step(const HNCurveBundle& e, const HNCurveBundle& e2,
                                                            Factor factor, const QVector& cls) {
  require_psef(e, e2, cls);
  const HNCurveBundle& target = factor == Factor::First ? e : e2;
  if (!reducible(target)) return std::nullopt;
  ReductionStep step{factor, target, sub_bundle_after_step(target, 1), target.first_quotient().rank,
                     factor == Factor::First ? cls[0] : cls[1]};
  return std::make_pair(std::move(step), coordinate_transport(cls));
}

TerminalSplit terminal_decompose(const HNCurveBundle& e, const HNCurveBundle& e2, const QVector& cls) {
  if (reducible(e) || reducible(e2)) {
    throw InvalidInput("terminal split needs each factor semistable or with a corank-one quotient Q_1");
  }
  require_psef(e, e2, cls);
  const bool first_n = corank_one(e);
  const bool second_n = corank_one(e2);
  TerminalSplit out;
  out.terminal = first_n ? (second_n ? TerminalCase::BothCorankOne : TerminalCase::FirstCorankOne)
                         : (second_n ? TerminalCase::SecondCorankOne : TerminalCase::BothSemistable);
  out.nef_part = QVector(3, 0);

  auto place = [&](const QVector& gen, const Rational& coeff, bool effective) {
    if (coeff == 0) return;
    if (effective) {
      out.effective_part.push_back({gen, coeff});
    } else {
      for (int i = 0; i < 3; ++i) out.nef_part[i] += coeff * gen[i];
    }
  };
  // For a corank-one factor, xi - mu_max F = xi + (d_1 - d) F is the class
  // of the sub-fibre-bundle P(Q_1): effective but not nef.
  place(tautological_ray(e, 0), cls[0], first_n);
  place(tautological_ray(e2, 1), cls[1], second_n);
  place(QVector{0, 0, 1}, f_coefficient(e, e2, cls), false);
  return out;
}

ZariskiCertificate decompose(const HNCurveBundle& e, const HNCurveBundle& e2, const QVector& cls,
                             ReductionOrder order) {
  require_psef(e, e2, cls);
  ZariskiCertificate cert;
  cert.input = cls;
  HNCurveBundle cur1 = e;
  HNCurveBundle cur2 = e2;
  QVector cur = cls;
  Factor next = order == ReductionOrder::SecondThenFirst ? Factor::Second : Factor::First;
  while (reducible(cur1) || reducible(cur2)) {
    Factor pick = next;
    if (!reducible(pick == Factor::First ? cur1 : cur2)) pick = pick == Factor::First ? Factor::Second : Factor::First;
    auto res = reduce_step(cur1, cur2, pick, cur);
    if (!res) throw InvariantViolation("reduction step refused on a reducible factor");
    auto& [step, transported] = *res;
    (pick == Factor::First ? cur1 : cur2) = step.to_bundle;
    cur = transported;
    cert.steps.push_back(std::move(step));
    if (order == ReductionOrder::Alternating) next = pick == Factor::First ? Factor::Second : Factor::First;
  }
  TerminalSplit split = terminal_decompose(cur1, cur2, cur);
  cert.terminal = split.terminal;
  cert.nef_part = std::move(split.nef_part);
  cert.effective_part = std::move(split.effective_part);
  const auto reasons = verify_reasons(cert, e, e2);
  if (!reasons.empty()) throw InvariantViolation("decomposition failed its own verification: " + reasons.front());
  cert.verified = true;
  return cert;
}

std::vector<std::string> verify_reasons(const ZariskiCertificate& cert, const HNCurveBundle& e,
                                        const HNCurveBundle& e2) {
  std::vector<std::string> reasons;
  if (cert.input.size() != 3 || cert.nef_part.size() != 3) {
    reasons.push_back("class dimensions are not 3");
    return reasons;
  }
  HNCurveBundle cur1 = e;
  HNCurveBundle cur2 = e2;
  QVector cur = cert.input;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    const std::string tag = "step " + std::to_string(i + 1) + ": ";
    HNCurveBundle& target = s.factor == Factor::First ? cur1 : cur2;
    if (!(s.from_bundle == target)) reasons.push_back(tag + "source bundle does not match the chain");
    if (!reducible(target)) {
      reasons.push_back(tag + "corank hypothesis fails (rank Q_1 > rank - 2)");
      break;
    }
    if (s.center_rank != target.first_quotient().rank) reasons.push_back(tag + "wrong centre rank");
    if (!(s.to_bundle == sub_bundle_after_step(target, 1))) reasons.push_back(tag + "target is not E_1");
    if (s.multiplicity < 0) reasons.push_back(tag + "negative exceptional multiplicity");
    const Rational expected = s.factor == Factor::First ? cur[0] : cur[1];
    if (s.multiplicity != expected) reasons.push_back(tag + "multiplicity differs from the tautological coefficient");
    target = sub_bundle_after_step(target, 1);
    cur = coordinate_transport(cur);
  }
  if (reducible(cur1) || reducible(cur2)) reasons.push_back("chain stops before a terminal pair");

  const bool first_n = corank_one(cur1);
  const bool second_n = corank_one(cur2);
  const TerminalCase expected_case =
      first_n ? (second_n ? TerminalCase::BothCorankOne : TerminalCase::FirstCorankOne)
              : (second_n ? TerminalCase::SecondCorankOne : TerminalCase::BothSemistable);
  if (cert.terminal != expected_case) reasons.push_back("terminal case label does not match the terminal pair");

  if (!fibre_product_nef_cone(cur1, cur2).contains(cert.nef_part)) reasons.push_back("P not nef");

  const RationalCone psef = fibre_product_psef_cone(cur1, cur2);
  for (const auto& t : cert.effective_part) {
    if (t.coefficient < 0) reasons.push_back("negative coefficient in N");
    if (t.generator.size() != 3 || !psef.contains(t.generator)) {
      reasons.push_back("N generator is not pseudoeffective");
      continue;
    }
    // Each N generator must be one of the terminal effective rays.
    const bool known = (first_n && t.generator == tautological_ray(cur1, 0)) ||
                       (second_n && t.generator == tautological_ray(cur2, 1));
    if (!known) reasons.push_back("N generator is not a terminal effective ray");
  }
  QVector sum = cert.effective_class();
  for (int i = 0; i < 3; ++i) sum[i] += cert.nef_part[i];
  if (sum != cur) reasons.push_back("P + N does not reproduce the input class");
  return reasons;
}

bool verify(const ZariskiCertificate& cert, const HNCurveBundle& e, const HNCurveBundle& e2) {
  return verify_reasons(cert, e, e2).empty();
}

std::vector<std::pair<QVector, ZariskiCertificate>> extremal_ray_decompositions(const HNCurveBundle& e,
                                                                               const HNCurveBundle& e2) {
  std::vector<std::pair<QVector, ZariskiCertificate>> out;
  for (const auto& ray : extremal_rays(fibre_product_psef_cone(e, e2))) out.emplace_back(ray, decompose(e, e2, ray));
  return out;
}

}  // namespace conecalc
