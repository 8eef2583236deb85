#pragma once

#include <nlohmann/json.hpp>

#include "conecalc/bundles.hpp"
#include "conecalc/cone_catalog.hpp"
#include "conecalc/cones.hpp"
#include "conecalc/intersection_ring.hpp"
#include "conecalc/zariski.hpp"

namespace conecalc {

using Json = nlohmann::json;

/// JSON encodings. Rationals are strings ("3/2"); every *_from_json is the
/// inverse of to_json and throws InvalidInput on malformed input, naming the
/// JSON path of the offending field.

Json to_json(const Rational& q);
Json to_json(const QVector& v);
Json to_json(const HNCurveBundle& b);
Json to_json(const IntersectionRing& ring, const NumClass& c);
Json to_json(const RationalCone& c);
Json to_json(const ConeReport& r);
Json to_json(const ReductionStep& s);
Json to_json(const ZariskiCertificate& c);

Rational rational_from_json(const Json& j, const std::string& path = "$");
QVector qvector_from_json(const Json& j, const std::string& path = "$");
HNCurveBundle bundle_from_json(const Json& j, const std::string& path = "$");
NumClass numclass_from_json(const IntersectionRing& ring, const Json& j, const std::string& path = "$");
RationalCone cone_from_json(const Json& j, const std::string& path = "$");
ConeReport cone_report_from_json(const Json& j, const std::string& path = "$");
ZariskiCertificate certificate_from_json(const Json& j, const std::string& path = "$");

}  // namespace conecalc
