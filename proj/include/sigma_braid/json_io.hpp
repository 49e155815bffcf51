#pragma once

#include <json.hpp>

#include "sigma_braid/bank.hpp"
#include "sigma_braid/characters.hpp"
#include "sigma_braid/criterion.hpp"
#include "sigma_braid/presentations.hpp"
#include "sigma_braid/sigma.hpp"

namespace sbraid {

using Json = nlohmann::json;

// Integers stay integers; other rationals become "p/q" strings.
Json to_json(const Rational& r);
Json to_json(const Integer& r);
Rational rational_from_json(const Json& j);

Json to_json(const GroupSpec& g);
Json to_json(const RelationTable& t);
Json to_json(const Abelianized& ab, const AbelianizationSpec& spec);
Json to_json(const Character& chi);
Json to_json(const SpherePoint& pt);
Json to_json(const CircleDescriptor& d);
Json to_json(const SigmaVerdict& v);
Json to_json(const ComplementEnumeration& e);
Json to_json(const PathCertificate& c);
Json to_json(const CertificateReport& r);
Json to_json(const BallReport& r);
Json to_json(const BankReport& r);
Json to_json(const RInfinityCertificate& c);
Json to_json(const LetterWeights& w);

// {"a":[...], "b":[...]} for T, {"b":[...]} for K, {"A":{"i,j":v}} for S2, scalars for B groups.
// group/surface/n keys, when present, must agree with g.
Character character_from_json(const GroupSpec& g, const Json& j);
// {"x": 1, "y": "-1/2", ...} on model letters.
LetterWeights model_weights_from_json(ModelId model, const Json& j);
PathCertificate certificate_from_json(const Json& j);

}  // namespace sbraid
