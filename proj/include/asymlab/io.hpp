#pragma once

#include "asymlab/polytope.hpp"

#include "json.hpp"

#include <string>

namespace asymlab {

using Json = nlohmann::json;

/// {"dim": n, "vertices": [...]} or {"dim": n, "halfspaces": [{"normal", "offset"}]};
/// when both are present the vertices win. Throws ParseError naming the field.
Polytope polytope_from_json(const Json& j);
Json to_json(const Polytope& p);

SurfaceMeasure measure_from_json(const Json& j);
Json to_json(const SurfaceMeasure& s);

/// Parses text, reporting line and column of syntax errors.
Json parse_json(const std::string& text, const std::string& origin = "<input>");
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// A JSON file, or a builtin name such as "simplex-3" or "regular-5-gon"
/// when no file of that name exists.
Polytope load_polytope(const std::string& path);
void save_polytope(const Polytope& p, const std::string& path);

SurfaceMeasure load_measure(const std::string& path);

Json vec_json(const Vec& v);

}  // namespace asymlab
