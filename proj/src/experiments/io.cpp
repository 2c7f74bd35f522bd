#include "asymlab/io.hpp"

#include "asymlab/bodies.hpp"
#include "asymlab/error.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace asymlab {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, field + ": " + what);
}

double number(const Json& j, const std::string& field) {
  if (!j.is_number()) bad(field, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) bad(field, "not finite");
  return x;
}

Vec vector_field(const Json& j, int dim, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array");
  if (static_cast<int>(j.size()) != dim) bad(field, "expected " + std::to_string(dim) + " coordinates");
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = number(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

int dim_field(const Json& j) {
  if (!j.is_object()) bad("<root>", "expected an object");
  if (!j.contains("dim")) bad("dim", "missing");
  if (!j["dim"].is_number_integer()) bad("dim", "expected an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1 || dim > kMaxDim) bad("dim", "must be between 1 and " + std::to_string(kMaxDim));
  return dim;
}

}  // namespace

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Polytope polytope_from_json(const Json& j) {
  const int dim = dim_field(j);
  if (j.contains("vertices")) {
    const Json& vs = j["vertices"];
    if (!vs.is_array()) bad("vertices", "expected an array");
    PointList pts;
    for (std::size_t i = 0; i < vs.size(); ++i)
      pts.push_back(vector_field(vs[i], dim, "vertices[" + std::to_string(i) + "]"));
    return convex_hull(pts);
  }
  if (j.contains("halfspaces")) {
    const Json& hs = j["halfspaces"];
    if (!hs.is_array()) bad("halfspaces", "expected an array");
    std::vector<Halfspace> planes;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const std::string f = "halfspaces[" + std::to_string(i) + "]";
      if (!hs[i].is_object() || !hs[i].contains("normal") || !hs[i].contains("offset"))
        bad(f, "expected {\"normal\": [...], \"offset\": k}");
      planes.push_back({vector_field(hs[i]["normal"], dim, f + ".normal"), number(hs[i]["offset"], f + ".offset")});
    }
    return intersect_halfspaces(planes);
  }
  bad("<root>", "needs \"vertices\" or \"halfspaces\"");
}

Json to_json(const Polytope& p) {
  Json j;
  j["dim"] = p.dim();
  j["vertices"] = Json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(vec_json(v));
  j["halfspaces"] = Json::array();
  for (const auto& f : p.facets())
    j["halfspaces"].push_back({{"normal", vec_json(f.plane.normal)}, {"offset", f.plane.offset}});
  j["volume"] = p.volume();
  return j;
}

SurfaceMeasure measure_from_json(const Json& j) {
  SurfaceMeasure s;
  s.dim = dim_field(j);
  if (!j.contains("atoms") || !j["atoms"].is_array()) bad("atoms", "expected an array");
  const Json& atoms = j["atoms"];
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string f = "atoms[" + std::to_string(i) + "]";
    if (!atoms[i].is_object() || !atoms[i].contains("normal") || !atoms[i].contains("weight"))
      bad(f, "expected {\"normal\": [...], \"weight\": w}");
    s.atoms.push_back({vector_field(atoms[i]["normal"], s.dim, f + ".normal"), number(atoms[i]["weight"], f + ".weight")});
  }
  return s;
}

Json to_json(const SurfaceMeasure& s) {
  Json j;
  j["dim"] = s.dim;
  j["atoms"] = Json::array();
  for (const auto& a : s.atoms) j["atoms"].push_back({{"normal", vec_json(a.normal)}, {"weight", a.weight}});
  return j;
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte offset to line and column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError,
                origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, path + ": cannot write");
  out << text;
}

Polytope load_polytope(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    if (auto b = builtin_body(path)) return *b;
    throw Error(ErrorKind::ParseError, path + ": no such file or builtin body");
  }
  const Json j = read_json_file(path);
  try {
    return polytope_from_json(j);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw Error(ErrorKind::ParseError, path + ": " + e.detail());
    throw;
  }
}

void save_polytope(const Polytope& p, const std::string& path) {
  write_text_file(path, to_json(p).dump(2) + "\n");
}

SurfaceMeasure load_measure(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return measure_from_json(j);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw Error(ErrorKind::ParseError, path + ": " + e.detail());
    throw;
  }
}

}  // namespace asymlab
