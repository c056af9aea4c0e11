// JSON form of triangulations.  Triangles are tagged unions:
//   {"type": "standard", "sides": ["a0", "s1", "a2"], "corners": [0, 1, 2]}
//   {"type": "self_folded", "loop": "a3", "radius": "a4", "puncture": 6}
//   {"type": "orbifold", "loop": "a2", "point": 0}
// Sides name arcs ("a<id>") or boundary segments ("s<id>") and run clockwise;
// corners are optional when the side endpoints determine them.
#pragma once

#include <json.hpp>

#include "gcl/orbit.hpp"
#include "gcl/surface.hpp"

namespace gcl {

OrbifoldDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json to_json(const OrbifoldDescriptor& d);

// Structural parse; throws ParseError with the JSON position of the problem.
// Semantic checks are left to validate().
Triangulation triangulation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Triangulation& t);

// {"generators": [{"points": [...], "arcs": [...]}, ...]}; entry i is the image of i.
std::vector<ActionGenerator> action_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<ActionGenerator>& gens);

}  // namespace gcl
