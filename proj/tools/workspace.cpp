#include "workspace.hpp"

#include <fstream>
#include <sstream>

#include "conecalc/errors.hpp"
#include "conecalc/json_io.hpp"

namespace conecalc::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InvalidInput(path + ": " + what); }

const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

std::string require_string(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = require(j, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

SurfaceBundle surface_bundle_from_json(const Json& j, const std::string& path, BaseKind base) {
  SurfaceBundle b;
  const Json& r = require(j, "rank", path);
  if (!r.is_number_integer() || r.get<long>() < 2) fail(path + ".rank", "expected an integer >= 2");
  b.rank = r.get<int>();
  const Json& c1 = require(j, "c1", path);
  const std::size_t width = base == BaseKind::SurfaceRho1 ? 1 : 2;
  if (c1.is_array()) {
    b.c1 = qvector_from_json(c1, path + ".c1");
  } else {
    b.c1 = {rational_from_json(c1, path + ".c1")};
  }
  if (b.c1.size() != width) fail(path + ".c1", "expected " + std::to_string(width) + " coordinate(s)");
  b.c2 = rational_from_json(require(j, "c2", path), path + ".c2");
  return b;
}

}  // namespace

WorkspaceSpec parse_workspace(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("$: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("$", "expected an object");
  WorkspaceSpec ws;

  const Json& base = require(doc, "base", "$");
  const std::string kind = require_string(base, "kind", "$.base");
  if (kind == "curve") {
    ws.base = BaseKind::Curve;
  } else if (kind == "surface_rho1") {
    ws.base = BaseKind::SurfaceRho1;
    ws.base_param = rational_from_json(require(base, "L2", "$.base"), "$.base.L2");
    if (ws.base_param <= 0) fail("$.base.L2", "L^2 must be positive");
  } else if (kind == "ruled_surface") {
    ws.base = BaseKind::RuledSurface;
    ws.base_param = rational_from_json(require(base, "mu", "$.base"), "$.base.mu");
  } else {
    fail("$.base.kind", "unknown base kind '" + kind + "'");
  }

  const Json& bundles = require(doc, "bundles", "$");
  if (!bundles.is_array()) fail("$.bundles", "expected an array");
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const std::string path = "$.bundles[" + std::to_string(i) + "]";
    const std::string name = require_string(bundles[i], "name", path);
    if (ws.bundles.count(name)) fail(path + ".name", "duplicate bundle name '" + name + "'");
    if (ws.base == BaseKind::Curve) {
      ws.bundles.emplace(name, bundle_from_json(bundles[i], path));
    } else {
      SurfaceBundle b = surface_bundle_from_json(bundles[i], path, ws.base);
      b.name = name;
      ws.bundles.emplace(name, std::move(b));
    }
  }

  const Json& space = require(doc, "space", "$");
  const std::string skind = require_string(space, "kind", "$.space");
  if (skind == "projective_bundle") {
    ws.space = SpaceKind::ProjectiveBundle;
  } else if (skind == "fibre_product") {
    ws.space = SpaceKind::FibreProduct;
  } else if (skind == "tower") {
    ws.space = SpaceKind::Tower;
  } else {
    fail("$.space.kind", "unknown space kind '" + skind + "'");
  }
  const Json& factors = require(space, "factors", "$.space");
  if (!factors.is_array()) fail("$.space.factors", "expected an array of bundle names");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string path = "$.space.factors[" + std::to_string(i) + "]";
    if (!factors[i].is_string()) fail(path, "expected a bundle name");
    const std::string name = factors[i].get<std::string>();
    if (!ws.bundles.count(name)) fail(path, "unknown bundle '" + name + "'");
    ws.factors.push_back(name);
  }
  const std::size_t n = ws.factors.size();
  if (ws.space == SpaceKind::ProjectiveBundle && n != 1) fail("$.space.factors", "projective_bundle takes one factor");
  if (ws.space == SpaceKind::FibreProduct && n != 2) fail("$.space.factors", "fibre_product takes two factors");
  if (ws.space == SpaceKind::Tower && n < 1) fail("$.space.factors", "tower needs at least one factor");
  if (ws.base != BaseKind::Curve && ws.space != SpaceKind::ProjectiveBundle)
    fail("$.space.kind", "fibre products are only supported over a curve");

  if (doc.contains("classes")) {
    const Json& classes = doc["classes"];
    if (!classes.is_object()) fail("$.classes", "expected an object of named coordinate vectors");
    const std::size_t width = ws.divisor_basis().size();
    for (auto it = classes.begin(); it != classes.end(); ++it) {
      const std::string path = "$.classes." + it.key();
      QVector v = qvector_from_json(it.value(), path);
      if (v.size() != width) fail(path, "expected " + std::to_string(width) + " coordinates");
      ws.classes.emplace(it.key(), std::move(v));
    }
  }
  return ws;
}

WorkspaceSpec load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read workspace file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

std::vector<HNCurveBundle> WorkspaceSpec::curve_factors() const {
  if (base != BaseKind::Curve) throw InvalidInput("this command needs a curve base");
  std::vector<HNCurveBundle> out;
  for (const auto& name : factors) out.push_back(std::get<HNCurveBundle>(bundles.at(name)));
  return out;
}

const SurfaceBundle& WorkspaceSpec::surface_factor() const {
  if (base == BaseKind::Curve) throw InvalidInput("this command needs a surface base");
  return std::get<SurfaceBundle>(bundles.at(factors.front()));
}

SurfacePreset WorkspaceSpec::surface_preset() const {
  const SurfaceBundle& b = surface_factor();
  if (base == BaseKind::SurfaceRho1) return SurfacePreset::rho1(b.rank, base_param, b.c1.front(), b.c2);
  return SurfacePreset::ruled(b.rank, base_param, b.c1, b.c2);
}

IntersectionRing WorkspaceSpec::ring(bool lambda_basis) const {
  if (base != BaseKind::Curve) {
    if (lambda_basis) return build_lambda_ring_surface(surface_preset());
    const SurfaceBundle& b = surface_factor();
    const std::vector<std::string> labels =
        base == BaseKind::SurfaceRho1 ? std::vector<std::string>{"L"} : std::vector<std::string>{"eta", "f"};
    const QMatrix pairing = base == BaseKind::SurfaceRho1 ? QMatrix{{base_param}}
                                                          : QMatrix{{2 * base_param, 1}, {1, 0}};
    return build_surface_xi_ring(b.rank, labels, pairing, b.c1, b.c2);
  }
  if (lambda_basis) throw InvalidInput("the lambda basis is only available over a surface");
  const auto fs = curve_factors();
  switch (space) {
    case SpaceKind::ProjectiveBundle:
      return build_curve_bundle_ring(fs[0].rank(), fs[0].degree());
    case SpaceKind::FibreProduct:
      return build_fibre_product_ring(fs[0].rank(), fs[1].rank(), fs[0].degree(), fs[1].degree());
    case SpaceKind::Tower: {
      std::vector<int> ranks;
      std::vector<long> degrees;
      for (const auto& f : fs) {
        ranks.push_back(f.rank());
        degrees.push_back(f.degree());
      }
      return build_tower_ring(ranks, degrees);
    }
  }
  throw InvariantViolation("unhandled space kind");
}

std::vector<std::string> WorkspaceSpec::divisor_basis() const {
  if (base == BaseKind::SurfaceRho1) return {"lambda", "L"};
  if (base == BaseKind::RuledSurface) return {"lambda", "eta", "f"};
  switch (space) {
    case SpaceKind::ProjectiveBundle:
      return {"xi", "f"};
    case SpaceKind::FibreProduct:
      return {"xi", "zeta", "F"};
    case SpaceKind::Tower: {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < factors.size(); ++i) out.push_back("xi" + std::to_string(i + 1));
      out.push_back("F");
      return out;
    }
  }
  return {};
}

std::string WorkspaceSpec::describe_space() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x_C P(" : "P(") + factors[i] + ")";
  switch (base) {
    case BaseKind::Curve:
      return out + " over a curve";
    case BaseKind::SurfaceRho1:
      return out + " over a Picard-rank-one surface (L^2 = " + to_string(base_param) + ")";
    case BaseKind::RuledSurface:
      return out + " over a ruled surface (mu = " + to_string(base_param) + ")";
  }
  return out;
}

}  // namespace conecalc::cli
