#include "conecalc/json_io.hpp"

#include "conecalc/errors.hpp"

namespace conecalc {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InvalidInput(path + ": " + what); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

long integer_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::string string_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json to_json(const HNCurveBundle& b) {
  Json hn = Json::array();
  for (const auto& q : b.quotients()) hn.push_back({q.rank, q.degree});
  Json out{{"rank", b.rank()}, {"degree", b.degree()}, {"hn", hn}};
  if (!b.name().empty()) out["name"] = b.name();
  return out;
}

Json to_json(const IntersectionRing& ring, const NumClass& c) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : c.terms)
    terms.push_back({{"monomial", ring.monomial_label(exps)}, {"coeff", to_string(coeff)}});
  return {{"degree", c.degree}, {"terms", terms}};
}

Json to_json(const RationalCone& c) {
  Json gens = Json::array();
  for (const auto& g : c.generators()) gens.push_back(to_json(g));
  Json ineqs = Json::array();
  for (const auto& h : c.inequalities()) ineqs.push_back(to_json(h));
  Json eqs = Json::array();
  for (const auto& e : c.equations()) eqs.push_back(to_json(e));
  return {{"dim", c.dim()}, {"generators", gens}, {"inequalities", ineqs}, {"equations", eqs}};
}

Json to_json(const ConeReport& r) {
  return {{"space", r.space}, {"k", r.k},          {"basis", r.basis},
          {"nef", to_json(r.nef)}, {"psef", to_json(r.psef)}, {"equal", r.equal}};
}

Json to_json(const ReductionStep& s) {
  return {{"factor", to_string(s.factor)},
          {"mult", to_string(s.multiplicity)},
          {"center_rank", s.center_rank},
          {"from", to_json(s.from_bundle)},
          {"to", to_json(s.to_bundle)}};
}

Json to_json(const ZariskiCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  Json n = Json::array();
  for (const auto& t : c.effective_part) n.push_back({{"gen", to_json(t.generator)}, {"coeff", to_string(t.coefficient)}});
  return {{"input", to_json(c.input)}, {"steps", steps},          {"terminal", to_string(c.terminal)},
          {"P", to_json(c.nef_part)},  {"N", n},                  {"verified", c.verified}};
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) fail(path, "expected a rational string such as \"3/2\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
}

QVector qvector_from_json(const Json& j, const std::string& path) {
  array_at(j, path);
  QVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

HNCurveBundle bundle_from_json(const Json& j, const std::string& path) {
  const int rank = static_cast<int>(integer_from_json(field(j, "rank", path), path + ".rank"));
  const long degree = integer_from_json(field(j, "degree", path), path + ".degree");
  std::string name;
  if (j.contains("name")) name = string_from_json(j["name"], path + ".name");
  if (!j.contains("hn")) {
    try {
      return HNCurveBundle::semistable(rank, degree, name);
    } catch (const InvalidInput& e) {
      fail(path, e.what());
    }
  }
  const std::string hp = path + ".hn";
  const Json& hn = array_at(j["hn"], hp);
  std::vector<HNQuotient> ladder;
  for (std::size_t i = 0; i < hn.size(); ++i) {
    const std::string qp = hp + "[" + std::to_string(i) + "]";
    if (!hn[i].is_array() || hn[i].size() != 2) fail(qp, "expected a [rank, degree] pair");
    ladder.push_back({static_cast<int>(integer_from_json(hn[i][0], qp + "[0]")), integer_from_json(hn[i][1], qp + "[1]")});
  }
  try {
    return HNCurveBundle(rank, degree, std::move(ladder), name);
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
}

NumClass numclass_from_json(const IntersectionRing& ring, const Json& j, const std::string& path) {
  NumClass c;
  c.degree = static_cast<int>(integer_from_json(field(j, "degree", path), path + ".degree"));
  const Json& terms = array_at(field(j, "terms", path), path + ".terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = path + ".terms[" + std::to_string(i) + "]";
    const std::string label = string_from_json(field(terms[i], "monomial", tp), tp + ".monomial");
    Polynomial p;
    try {
      p = ring.parse(label);
    } catch (const InvalidInput& e) {
      fail(tp + ".monomial", e.what());
    }
    if (p.size() != 1 || p.begin()->second != 1) fail(tp + ".monomial", "expected a single monomial");
    const Exponents& e = p.begin()->first;
    if (ring.weighted_degree(e) != c.degree) fail(tp + ".monomial", "monomial degree differs from the class degree");
    const Rational q = rational_from_json(field(terms[i], "coeff", tp), tp + ".coeff");
    if (q != 0) c.terms[e] += q;
  }
  return c;
}

RationalCone cone_from_json(const Json& j, const std::string& path) {
  const int dim = static_cast<int>(integer_from_json(field(j, "dim", path), path + ".dim"));
  const Json& gens = array_at(field(j, "generators", path), path + ".generators");
  std::vector<QVector> gs;
  for (std::size_t i = 0; i < gens.size(); ++i)
    gs.push_back(qvector_from_json(gens[i], path + ".generators[" + std::to_string(i) + "]"));
  try {
    return RationalCone(dim, std::move(gs));
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
}

ConeReport cone_report_from_json(const Json& j, const std::string& path) {
  const std::string space = string_from_json(field(j, "space", path), path + ".space");
  const int k = static_cast<int>(integer_from_json(field(j, "k", path), path + ".k"));
  const Json& b = array_at(field(j, "basis", path), path + ".basis");
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < b.size(); ++i) basis.push_back(string_from_json(b[i], path + ".basis[" + std::to_string(i) + "]"));
  return ConeReport(space, k, std::move(basis), cone_from_json(field(j, "nef", path), path + ".nef"),
                    cone_from_json(field(j, "psef", path), path + ".psef"));
}

ZariskiCertificate certificate_from_json(const Json& j, const std::string& path) {
  ZariskiCertificate c;
  c.input = qvector_from_json(field(j, "input", path), path + ".input");
  const Json& steps = array_at(field(j, "steps", path), path + ".steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string sp = path + ".steps[" + std::to_string(i) + "]";
    const Json& s = steps[i];
    Factor f;
    try {
      f = parse_factor(string_from_json(field(s, "factor", sp), sp + ".factor"));
    } catch (const InvalidInput& e) {
      fail(sp + ".factor", e.what());
    }
    c.steps.push_back(ReductionStep{f, bundle_from_json(field(s, "from", sp), sp + ".from"),
                                    bundle_from_json(field(s, "to", sp), sp + ".to"),
                                    static_cast<int>(integer_from_json(field(s, "center_rank", sp), sp + ".center_rank")),
                                    rational_from_json(field(s, "mult", sp), sp + ".mult")});
  }
  try {
    c.terminal = parse_terminal_case(string_from_json(field(j, "terminal", path), path + ".terminal"));
  } catch (const InvalidInput& e) {
    fail(path + ".terminal", e.what());
  }
  c.nef_part = qvector_from_json(field(j, "P", path), path + ".P");
  const Json& n = array_at(field(j, "N", path), path + ".N");
  for (std::size_t i = 0; i < n.size(); ++i) {
    const std::string np = path + ".N[" + std::to_string(i) + "]";
    c.effective_part.push_back({qvector_from_json(field(n[i], "gen", np), np + ".gen"),
                                rational_from_json(field(n[i], "coeff", np), np + ".coeff")});
  }
  const Json& v = field(j, "verified", path);
  if (!v.is_boolean()) fail(path + ".verified", "expected a boolean");
  c.verified = v.get<bool>();
  return c;
}

}  // namespace conecalc
