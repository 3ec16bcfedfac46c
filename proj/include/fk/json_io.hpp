#pragma once

#include "fk/laurent.hpp"
#include "fk/rational_function.hpp"

#include <json.hpp>

namespace fk {

// Canonical serialization:
//   { "vars": [names], "terms": [ { "e": [quarter-lattice numerators], "c": "num/den" } ] }
// Terms sorted lexicographically by exponent vector; golden files use exactly
// this shape.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RationalFunction& rf);
RationalFunction rational_function_from_json(const nlohmann::json& j);

// Serialize with a fixed layout (2-space indent, sorted keys off — object
// key order is insertion order and we always insert in the same order).
std::string canonical_dump(const nlohmann::json& j);

}  // namespace fk
