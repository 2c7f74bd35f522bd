#include "asymlab/bodies.hpp"

#include "asymlab/error.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace asymlab {

namespace {

void check_dim(int dim) {
  if (dim < 2 || dim > kMaxDim)
    throw Error(ErrorKind::UnsupportedDim, "dimension " + std::to_string(dim) + " not in [2, 6]");
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Polytope standard_simplex(int dim) {
  check_dim(dim);
  PointList pts{Vec::Zero(dim)};
  for (int i = 0; i < dim; ++i) pts.push_back(unit_vector(dim, i));
  return convex_hull(pts);
}

Polytope cube(int dim, double lo, double hi) {
  check_dim(dim);
  PointList pts;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    Vec p(dim);
    for (int i = 0; i < dim; ++i) p[i] = (mask >> i) & 1 ? hi : lo;
    pts.push_back(p);
  }
  return convex_hull(pts);
}

Polytope cross_polytope(int dim) {
  check_dim(dim);
  PointList pts;
  for (int i = 0; i < dim; ++i) {
    pts.push_back(unit_vector(dim, i));
    pts.push_back(-unit_vector(dim, i));
  }
  return convex_hull(pts);
}

Polytope regular_polygon(int k) {
  if (k < 3) throw Error(ErrorKind::InvalidArgument, "regular polygon needs k >= 3");
  PointList pts;
  for (int i = 0; i < k; ++i) {
    const double t = 2.0 * std::numbers::pi * i / k;
    Vec p(2);
    p << std::cos(t), std::sin(t);
    pts.push_back(p);
  }
  return convex_hull(pts);
}

std::optional<Polytope> builtin_body(std::string_view name) {
  auto suffix_int = [&](std::string_view prefix) -> std::optional<int> {
    if (!name.starts_with(prefix)) return std::nullopt;
    return parse_int(name.substr(prefix.size()));
  };
  if (auto n = suffix_int("simplex-")) return standard_simplex(*n);
  if (auto n = suffix_int("cube-")) return cube(*n);
  if (auto n = suffix_int("cross-")) return cross_polytope(*n);
  if (name.starts_with("regular-") && name.ends_with("-gon")) {
    auto k = parse_int(name.substr(8, name.size() - 8 - 4));
    if (k) return regular_polygon(*k);
  }
  return std::nullopt;
}

}  // namespace asymlab
