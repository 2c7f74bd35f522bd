#pragma once

#include "asymlab/polytope.hpp"

#include <optional>
#include <string_view>

namespace asymlab {

/// conv{0, e_1, ..., e_n}
Polytope standard_simplex(int dim);

/// [lo, hi]^n
Polytope cube(int dim, double lo = -1.0, double hi = 1.0);

/// conv{±e_i}
Polytope cross_polytope(int dim);

/// Regular k-gon inscribed in the unit circle, first vertex on the x axis.
Polytope regular_polygon(int k);

/// "simplex-n", "cube-n" ([-1,1]^n), "cross-n", "regular-k-gon".
std::optional<Polytope> builtin_body(std::string_view name);

}  // namespace asymlab
