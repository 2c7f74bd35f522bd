#pragma once

#include "asymlab/types.hpp"

#include <array>
#include <span>
#include <vector>

namespace asymlab::detail {

/// Boundary simplex of a triangulated hull. Only the first `dim` slots are used.
struct HullFacet {
  std::array<int, kMaxDim> verts{};
  // neighbors[i] is the facet sharing every vertex except verts[i]
  std::array<int, kMaxDim> neighbors{};
  Vec normal;
  double offset = 0.0;
};

struct Hull {
  int dim = 0;
  std::vector<HullFacet> facets;
  std::vector<int> vertices;  // sorted input indices
  Vec interior;
};

/// Quickhull in 2..6 dimensions. A point is beyond a facet only when it is
/// more than `eps` above the facet's hyperplane, so near-coplanar points are
/// absorbed and coplanar facets come out as several simplices.
/// Throws Error(DegenerateInput) when the points do not span the space.
Hull quickhull(std::span<const Vec> points, double eps);

/// Recomputes the facet planes of `hull` for moved points with the same
/// indices. False when some point ends up more than eps beyond a facet, in
/// which case the combinatorics are stale and `hull` must be rebuilt.
bool refresh_hull(Hull& hull, std::span<const Vec> points, double eps);

/// Length of the bounding-box diagonal.
double bbox_diameter(std::span<const Vec> points);

/// Unit normal of the hyperplane through dim points, oriented away from `inside`.
Vec hyperplane_normal(std::span<const Vec> points, const Vec& inside);

}  // namespace asymlab::detail
