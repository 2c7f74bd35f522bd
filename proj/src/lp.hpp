#pragma once

#include "asymlab/types.hpp"

#include <optional>
#include <span>

namespace asymlab::detail {

struct ChebyshevBall {
  Vec center;
  double radius = 0.0;  // negative when the system is infeasible
};

/// Largest ball inside {x : <u_i, x> <= k_i} for unit normals u_i, found by
/// solving the dual LP  min sum k_i y_i  s.t.  sum y_i u_i = 0, sum y_i = 1,
/// y >= 0  with a two-phase tableau simplex (Bland's rule).
/// Returns nullopt when the dual is infeasible, i.e. the origin is not in the
/// convex hull of the normals and the region is unbounded.
std::optional<ChebyshevBall> chebyshev_center(std::span<const Halfspace> hs, int dim);

}  // namespace asymlab::detail
