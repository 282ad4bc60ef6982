#pragma once

#include <json.hpp>

#include "orbitdx/jordan.hpp"
#include "orbitdx/mat.hpp"
#include "orbitdx/oracle.hpp"
#include "orbitdx/orbit.hpp"
#include "orbitdx/symplectic.hpp"

namespace orbitdx {

using nlohmann::json;

// Matrix: {"rows": R, "cols": C, "entries": [["...", ...], ...]} with
// entries rendered as scalar strings, row-major.
json to_json(const Mat& m);
Mat mat_from_json(const json& j);

// Structure: {"eigenvalues": [{"value": "...", "chains": [3,2]}, ...]}
json to_json(const JordanStructure& s);
JordanStructure structure_from_json(const json& j);

// Type sequence: {"steps": [{"lambda": "...", "n": 2}, ...]}
json to_json(const TypeSequence& t);
TypeSequence type_sequence_from_json(const json& j);

// Coordinates: {"type_sequence": {...}, "q": {"i,j": <matrix>}, "p": {"j,i": <matrix>}}
json to_json(const CanonicalCoords& c);
CanonicalCoords coords_from_json(const json& j);

// Chart: {"perm": [3,1,2,...]} (1-based images)
json to_json(const Chart& chart);
Chart chart_from_json(const json& j);

json to_json(const CoordinateIndex& idx);

json to_json(const WeyrTable& t);
json to_json(const OrbitReport& r);

json load_json_file(const std::string& path);
void dump_json_file(const std::string& path, const json& j);

} // namespace orbitdx
