#include "commands.hpp"

#include <sstream>

#include "conecalc/cone_catalog.hpp"
#include "conecalc/errors.hpp"
#include "conecalc/zariski.hpp"
#include "criteria.hpp"

namespace conecalc::cli {

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string render_class(const QVector& v, const std::vector<std::string>& basis) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const Rational mag = abs(v[i]);
    if (out.empty()) {
      out = v[i] < 0 ? "-" : "";
    } else {
      out += v[i] < 0 ? " - " : " + ";
    }
    out += (mag == 1 ? "" : to_string(mag) + "*") + basis[i];
  }
  return out.empty() ? "0" : out;
}

void list_cone(std::ostringstream& out, const RationalCone& c) {
  out << "  generators:\n";
  for (const auto& g : c.generators()) out << "    " << to_string(g) << "\n";
  out << "  inequalities (h.x >= 0):\n";
  for (const auto& h : c.inequalities()) out << "    " << to_string(h) << "\n";
  if (!c.equations().empty()) {
    out << "  equations (e.x = 0):\n";
    for (const auto& e : c.equations()) out << "    " << to_string(e) << "\n";
  }
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const NotPseudoeffective*>(&e)) return "not_pseudoeffective";
  if (dynamic_cast<const ContractViolation*>(&e)) return "contract_violation";
  if (dynamic_cast<const InvalidPreset*>(&e)) return "invalid_preset";
  if (dynamic_cast<const DegreeMismatch*>(&e)) return "degree_mismatch";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension_mismatch";
  if (dynamic_cast<const InvalidInput*>(&e)) return "invalid_input";
  if (dynamic_cast<const InvariantViolation*>(&e)) return "invariant_violation";
  return "internal_error";
}

}  // namespace

CommandOutput error_output(const std::exception& e) {
  CommandOutput out;
  out.exit_code = dynamic_cast<const InvalidInput*>(&e) ? kInvalidInput : kInternalError;
  out.text = std::string("error: ") + e.what() + "\n";
  out.json = {{"error", {{"kind", error_kind(e)}, {"message", e.what()}, {"exit_code", out.exit_code}}}};
  return out;
}

QVector resolve_class(const WorkspaceSpec& ws, const std::string& text, std::size_t width) {
  if (auto it = ws.classes.find(text); it != ws.classes.end()) {
    if (it->second.size() != width)
      throw DimensionMismatch("class '" + text + "' has " + std::to_string(it->second.size()) +
                              " coordinates; expected " + std::to_string(width));
    return it->second;
  }
  QVector v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != width) {
    throw DimensionMismatch("class '" + text + "' has " + std::to_string(v.size()) + " coordinates; expected " +
                            std::to_string(width));
  }
  return v;
}

ConeReport space_cones(const WorkspaceSpec& ws, int k) {
  if (ws.base != BaseKind::Curve) return codim_k_cones(ws.surface_preset(), k);
  if (k != 1) throw InvalidInput("only divisor cones (k = 1) are available over a curve");
  const auto fs = ws.curve_factors();
  switch (ws.space) {
    case SpaceKind::ProjectiveBundle:
      return curve_bundle_cones(fs[0]);
    case SpaceKind::FibreProduct:
      return fibre_product_cones(fs[0], fs[1]);
    case SpaceKind::Tower:
      return tower_cones(fs).back();
  }
  throw InvariantViolation("unhandled space kind");
}

CommandOutput ring_eval(const WorkspaceSpec& ws, const RingEvalArgs& args) {
  const IntersectionRing ring = ws.ring(args.lambda_basis);
  const NumClass cls = ring.normal_form(ring.parse(args.expr));
  CommandOutput out;
  std::ostringstream text;
  text << "ring: " << ring.name() << " (dim " << ring.dim() << ")\n";
  text << "normal form: " << ring.to_string(cls) << "\n";
  out.json = {{"command", "ring eval"}, {"ring", ring.name()}, {"class", to_json(ring, cls)}};
  if (cls.degree == ring.dim()) {
    const Rational deg = ring.degree(cls);
    text << "degree: " << to_string(deg) << "\n";
    out.json["degree"] = to_string(deg);
  }
  out.text = text.str();
  return out;
}

CommandOutput cone(const WorkspaceSpec& ws, const ConeArgs& args) {
  const ConeReport report = space_cones(ws, args.k);
  const RationalCone& c = args.nef ? report.nef : report.psef;
  std::ostringstream text;
  text << "space: " << report.space << "\n";
  text << "codimension: " << report.k << "\n";
  text << "basis: (" << join(report.basis, ", ") << ")\n";
  text << (args.nef ? "nef" : "psef") << " cone:\n";
  list_cone(text, c);
  text << "nef = psef: " << (report.equal ? "true" : "false") << "\n";
  CommandOutput out;
  out.text = text.str();
  out.json = {{"command", "cone"}, {"cone", args.nef ? "nef" : "psef"}, {"report", to_json(report)}};
  return out;
}

CommandOutput member(const WorkspaceSpec& ws, const MemberArgs& args) {
  const ConeReport report = space_cones(ws, args.k);
  const RationalCone& c = args.nef ? report.nef : report.psef;
  const QVector v = resolve_class(ws, args.cls, report.basis.size());
  const auto violated = c.violated_constraint(v);
  CommandOutput out;
  out.exit_code = violated ? kNegative : kOk;
  const std::string which = args.nef ? "nef" : "psef";
  std::ostringstream text;
  text << "basis: (" << join(report.basis, ", ") << ")\n";
  text << "class " << render_class(v, report.basis) << (violated ? " is not " : " is ") << which << "\n";
  if (violated) text << "violated: " << *violated << "\n";
  out.text = text.str();
  out.json = {{"command", "member"}, {"cone", which}, {"basis", report.basis}, {"class", to_json(v)},
              {"member", !violated}};
  if (violated) out.json["violated"] = *violated;
  return out;
}

CommandOutput zariski(const WorkspaceSpec& ws, const ZariskiArgs& args) {
  if (ws.base != BaseKind::Curve || ws.space != SpaceKind::FibreProduct)
    throw InvalidInput("zariski needs a fibre_product space over a curve");
  const auto fs = ws.curve_factors();
  const QVector v = resolve_class(ws, args.cls, 3);
  const ZariskiCertificate cert = decompose(fs[0], fs[1], v);
  const std::vector<std::string> basis{"xi", "zeta", "F"};
  std::ostringstream text;
  text << "input: " << render_class(v, basis) << "\n";
  text << "reduction steps: " << cert.steps.size() << "\n";
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    text << "  " << i + 1 << ". " << to_string(s.factor) << " factor: rank " << s.from_bundle.rank() << " -> rank "
         << s.to_bundle.rank() << ", centre rank " << s.center_rank << ", exceptional multiplicity "
         << to_string(s.multiplicity) << "\n";
  }
  text << "terminal case: " << to_string(cert.terminal) << "\n";
  text << "P (nef): " << render_class(cert.nef_part, basis) << "\n";
  text << "N (effective): ";
  if (cert.effective_part.empty()) text << "0";
  for (std::size_t i = 0; i < cert.effective_part.size(); ++i) {
    const auto& t = cert.effective_part[i];
    text << (i ? " + " : "") << to_string(t.coefficient) << "*(" << render_class(t.generator, basis) << ")";
  }
  text << "\nverified: " << (cert.verified ? "true" : "false") << "\n";
  CommandOutput out;
  out.text = text.str();
  out.json = {{"command", "zariski"}, {"certificate", to_json(cert)}};
  return out;
}

CommandOutput homog(const WorkspaceSpec& ws, const HomogArgs& args) {
  const ConeReport report = k_homogeneity_report(ws.surface_preset(), args.k);
  CommandOutput out;
  out.exit_code = report.equal ? kOk : kNegative;
  out.text = "k = " + std::to_string(args.k) + ": " + (report.equal ? "k-homogeneous" : "not k-homogeneous") +
             " (basis " + join(report.basis, ", ") + ")\n";
  out.json = {{"command", "homog"}, {"k", args.k}, {"homogeneous", report.equal}, {"report", to_json(report)}};
  return out;
}

CommandOutput selftest() {
  CommandOutput out;
  Json results = Json::array();
  bool ok = true;
  for (int id = 1; id <= testing::kCriterionCount; ++id) {
    const auto r = testing::run_criterion(id);
    out.text += testing::format_result(r) + "\n";
    results.push_back({{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed()},
                       {"seconds", r.seconds},
                       {"limit_seconds", r.limit_seconds},
                       {"detail", r.detail}});
    ok = ok && r.passed();
  }
  out.exit_code = ok ? kOk : kNegative;
  out.json = {{"command", "selftest"}, {"passed", ok}, {"criteria", results}};
  return out;
}

}  // namespace conecalc::cli
