#pragma once

#include <json.hpp>

#include "divlie/autos.hpp"
#include "divlie/closure.hpp"
#include "divlie/report.hpp"

namespace divlie {

using Json = nlohmann::ordered_json;

// Polynomial: {"n": int, "terms": [{"exps": [int...], "coeff": "p/q"}...]}
Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

// Derivation: {"n": int, "coeffs": [Polynomial...]}
Json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);

// Automorphism: {"n": int, "word": [{"kind": "affine", "A": [["p/q"...]...], "b": ["p/q"...]}
//                                   | {"kind": "tri", "i": int, "f": Polynomial} ...]}
Json automorphism_to_json(const Automorphism& a);
Automorphism automorphism_from_json(const Json& j);

// Generator list: a JSON array of Derivation documents.
std::vector<Derivation> derivation_list_from_json(const Json& j);

// Report: [{"check": ..., "status": "pass"/"fail", "witness": ...}...]
Json report_to_json(const Report& rep);
std::string report_to_text(const Report& rep);

}  // namespace divlie
