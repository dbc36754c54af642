#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lgmk/error.hpp"
#include "lgmk/fanogeom.hpp"

namespace lgmk {

namespace {

// Cohomology tables use real degrees; mult entries are [i, j, k, coeff] with
// products by the unit implied.
const std::map<std::string, std::string>& presets() {
  static const std::map<std::string, std::string> table = {
      {"point", R"({
        "name": "point", "dim": 0, "rays": [], "max_cones": [[]],
        "ne_generators": 0, "intersection": [],
        "cohomology": {"basis": [{"name": "1", "degree": 0}], "mult": [], "integration": [1]},
        "divisor_classes": []
      })"},
      {"P1", R"({
        "name": "P1", "dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]],
        "ne_generators": 1, "intersection": [[1, 1]], "anticanonical_degree": [2],
        "cohomology": {
          "basis": [{"name": "1", "degree": 0}, {"name": "H", "degree": 2}],
          "mult": [], "integration": [0, 1]},
        "divisor_classes": [[0, 1], [0, 1]], "c1": [0, 2]
      })"},
      {"P2", R"({
        "name": "P2", "dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
        "max_cones": [[0, 1], [1, 2], [0, 2]],
        "ne_generators": 1, "intersection": [[1, 1, 1]], "anticanonical_degree": [3],
        "cohomology": {
          "basis": [{"name": "1", "degree": 0}, {"name": "H", "degree": 2}, {"name": "H^2", "degree": 4}],
          "mult": [[1, 1, 2, 1]], "integration": [0, 0, 1]},
        "divisor_classes": [[0, 1, 0], [0, 1, 0], [0, 1, 0]], "c1": [0, 3, 0]
      })"},
      {"P3", R"({
        "name": "P3", "dim": 3, "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]],
        "max_cones": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
        "ne_generators": 1, "intersection": [[1, 1, 1, 1]], "anticanonical_degree": [4],
        "cohomology": {
          "basis": [{"name": "1", "degree": 0}, {"name": "H", "degree": 2},
                    {"name": "H^2", "degree": 4}, {"name": "H^3", "degree": 6}],
          "mult": [[1, 1, 2, 1], [1, 2, 3, 1], [2, 1, 3, 1]], "integration": [0, 0, 0, 1]},
        "divisor_classes": [[0, 1, 0, 0], [0, 1, 0, 0], [0, 1, 0, 0], [0, 1, 0, 0]], "c1": [0, 4, 0, 0]
      })"},
      {"P1xP1", R"({
        "name": "P1xP1", "dim": 2, "rays": [[1, 0], [-1, 0], [0, 1], [0, -1]],
        "max_cones": [[0, 2], [0, 3], [1, 2], [1, 3]],
        "ne_generators": 2, "intersection": [[1, 1, 0, 0], [0, 0, 1, 1]], "anticanonical_degree": [2, 2],
        "cohomology": {
          "basis": [{"name": "1", "degree": 0}, {"name": "H1", "degree": 2},
                    {"name": "H2", "degree": 2}, {"name": "H1H2", "degree": 4}],
          "mult": [[1, 2, 3, 1], [2, 1, 3, 1]], "integration": [0, 0, 0, 1]},
        "divisor_classes": [[0, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 1, 0]], "c1": [0, 2, 2, 0]
      })"},
      {"P2_cubic", R"({
        "name": "P2_cubic", "kind": "smooth_divisor", "dim": 2, "max_cones": [[0]],
        "ne_generators": 1, "intersection": [[3]], "anticanonical_degree": [3],
        "cohomology": {
          "basis": [{"name": "1", "degree": 0}, {"name": "H", "degree": 2}, {"name": "H^2", "degree": 4}],
          "mult": [[1, 1, 2, 1]], "integration": [0, 0, 1]},
        "divisor_classes": [[0, 3, 0]], "c1": [0, 3, 0],
        "j_source": {"divisor_classes": [[0, 1, 0], [0, 1, 0], [0, 1, 0]], "intersection": [[1, 1, 1]]}
      })"},
  };
  return table;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : presets()) names.push_back(k);
  return names;
}

std::string preset_json(const std::string& name) {
  auto it = presets().find(name);
  if (it == presets().end()) throw GeometryError(GeometryErrorCode::unknown_preset, "'" + name + "'");
  return it->second;
}

}  // namespace lgmk
