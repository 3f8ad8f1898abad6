#pragma once

#include <json.hpp>

#include "epalg/representation.hpp"
#include "epalg/structure_constants.hpp"

namespace epalg {

/// Bit-exact JSON encoding of a field element:
/// {"re":["p/q","r/s"],"im":["p/q","r/s"]} meaning
/// (p/q + (r/s) sqrt2) + i (...), fractions canonical lowest-terms.
nlohmann::json scalar_to_json(const ExactScalar& s);
ExactScalar scalar_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json label_to_json(const SpinorLabel& l);
SpinorLabel label_from_json(const nlohmann::json& j);

/// Representation file, schema "epalg/1".
nlohmann::json rep_to_json(const Representation& rep);
Representation rep_from_json(const nlohmann::json& j);

/// algebra.json export: generators in canonical order plus every stored
/// bracket with its rational coefficients.
nlohmann::json algebra_to_json(const StructureConstants& sc);

}  // namespace epalg
