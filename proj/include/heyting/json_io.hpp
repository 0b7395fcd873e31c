#pragma once

#include <string>

#include <json.hpp>

#include "heyting/algebra.hpp"
#include "heyting/modal.hpp"
#include "heyting/presentation.hpp"

namespace heyting {

using Json = nlohmann::json;

// {"size": n, "leq": [[0|1, ...], ...], "labels": [...]}
Json algebra_to_json(const HeytingAlgebra& a);
// Recomputes and validates the tables; malformed documents raise InvalidInput.
HeytingAlgebra algebra_from_json(const Json& j);

// {"atoms": m, "box": [mask per carrier index]}
Json interior_to_json(const InteriorAlgebra& b);
InteriorAlgebra interior_from_json(const Json& j);

struct PresentationFile {
  Presentation presentation;
  VarietyHandle variety;
};

// {"formula": text, "vars": ["p1", ...], "target": expr, "valuation": [index, ...],
//  "variety": {"generators": [expr, ...], "bound": n, "axioms": [text, ...]}}
// Without generators the variety is taken from its axioms (none: all algebras).
PresentationFile presentation_from_json(const Json& j);
Json presentation_to_json(const Presentation& p, const VarietyHandle& v);

}  // namespace heyting
