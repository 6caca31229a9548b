#pragma once

// JSON file formats.
//
// Scalars serialize as "p/q" or "p/q+r/s i". Matrices are row-major nested
// arrays of scalar strings.
//
// algebra:   {type, field?, dim, labels?, structure_constants: [[i,j,k,"c"]...],
//             unit: [..], counit: [..], grading?: [0|1..]}
// bimodule:  {type, left_algebra: <inline|path>, right_algebra, dim,
//             left_actions: [matrix..], right_actions: [matrix..], grading?}
// surface:   {type, triangles: [[e,e,e]..], gluings: [[a,b,"+1"|"-1"]..]}
// category:  {type, objects: [..], morphisms: [{name,src,dst}..],
//             identity: {obj: mor}, composition: [[f,g,h]..] with h = g.f,
//             volution?: {d_obj: {..}, d_mor: {..}, eta: {obj: mor}}}
// involution:{type, matrix: [..]}
//
// Loaders fix the session field from the file's "field" entry (default: the
// ORBICAT_FIELD environment variable, else Q) and refuse to mix fields.

#include <filesystem>
#include <optional>

#include "json.hpp"

#include "orbicat/bimodule.hpp"
#include "orbicat/category.hpp"
#include "orbicat/statesum.hpp"

namespace orbicat {

using Json = nlohmann::json;

// Resolves "Q"/"Qi"; throws ParseError on anything else.
Field parse_field(const std::string& name);

// Applies the file-level field selection: file entry wins, then the
// ORBICAT_FIELD environment variable, then Q. Throws ParseError when the
// requested field contradicts the session of an earlier load in this run.
void apply_field(const Json& j, bool* field_fixed);

Scalar scalar_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

AlgebraRef algebra_from_json(const Json& j, const std::filesystem::path& base_dir,
                             bool* field_fixed);
Bimodule bimodule_from_json(const Json& j, const std::filesystem::path& base_dir,
                            bool* field_fixed);
CombSurface surface_from_json(const Json& j);
Matrix involution_from_json(const Json& j);

struct LoadedCategory {
    FiniteCategory cat;
    std::optional<FiniteVolution> volution; // present when the file has one
};
LoadedCategory category_from_json(const Json& j);

// reads a whole file, dispatching on its mandatory "type" entry internally
Json read_json_file(const std::filesystem::path& path);

} // namespace orbicat
