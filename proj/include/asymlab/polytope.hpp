#pragma once

#include "asymlab/types.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace asymlab {

struct Facet {
  Halfspace plane;
  std::vector<int> vertices;  // indices into Polytope::vertices()
  double area = 0.0;          // (n-1)-volume
};

/// A full-dimensional convex polytope carried in both representations.
///
/// Instances are immutable and can only be produced by the construction
/// routines below, which run a hull and so guarantee that the vertex list is
/// minimal, the facet list is irredundant and the two descriptions agree to
/// within kGeomEps * diameter. The boundary triangulation used for volumes
/// is kept alongside.
class Polytope {
 public:
  int dim() const { return dim_; }
  const PointList& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const Vec& interior_point() const { return interior_; }

  /// Boundary (n-1)-simplices as vertex indices; first dim() entries are used.
  const std::vector<std::array<int, kMaxDim>>& boundary_simplices() const { return simplices_; }

  double volume() const { return volume_; }
  /// Bounding-box diagonal of the vertices; the scale for every tolerance.
  double diameter() const { return diameter_; }
  double eps() const { return kGeomEps * diameter_; }

  /// Centre of mass of the solid.
  Vec centroid() const;
  /// Second moment matrix  (1/|P|) * integral of (x - c)(x - c)^T  about the centroid.
  Mat covariance() const;

  std::vector<Halfspace> halfspaces() const;

 private:
  friend Polytope build_polytope(std::span<const Vec> points, std::span<const Halfspace> snap);
  friend Polytope translate(const Polytope& p, const Vec& b);
  friend Polytope negate(const Polytope& p);
  friend Polytope scale(const Polytope& p, double s);

  Polytope() = default;

  int dim_ = 0;
  PointList vertices_;
  std::vector<Facet> facets_;
  std::vector<std::array<int, kMaxDim>> simplices_;
  Vec interior_;
  double volume_ = 0.0;
  double diameter_ = 0.0;
};

/// Atomic measure on the sphere: weight attached to each unit normal.
struct Atom {
  Vec normal;
  double weight = 0.0;
};

struct SurfaceMeasure {
  int dim = 0;
  std::vector<Atom> atoms;

  double total_mass() const;
  Vec centroid() const;  // sum of weight * normal
};

Polytope convex_hull(std::span<const Vec> points);

/// Intersection of finitely many halfspaces, via the dual transform around a
/// Chebyshev centre. Facet normals of the result are exactly the input normals.
/// Throws Unbounded when the normals do not positively span the space and
/// Empty when the intersection has no interior.
Polytope intersect_halfspaces(std::span<const Halfspace> hs);

/// Volume of {x : <u_i,x> <= k_i}, or 0 when it has no interior. The normals
/// must already positively span the space; no Polytope is assembled.
double halfspace_volume(std::span<const Halfspace> hs);

double volume(const Polytope& p);

/// h_P(u) = max over vertices of <u, v>. Throws ZeroDirection for u = 0.
double support(const Polytope& p, const Vec& u);

/// One atom per facet with the facet's (n-1)-volume as weight.
SurfaceMeasure surface_area_measure(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Nullopt when the intersection has volume below 1e-14 * min(|P|, |Q|).
std::optional<Polytope> intersect(const Polytope& p, const Polytope& q);

Polytope affine_map(const Polytope& p, const Mat& a, const Vec& b);
Polytope translate(const Polytope& p, const Vec& b);
Polytope negate(const Polytope& p);
Polytope scale(const Polytope& p, double s);

/// sup over unit u of |h_P(u) - h_Q(u)|. Exact in the plane (piecewise
/// sinusoid maximisation); in higher dimension it is the maximum over facet
/// normals of both bodies plus 4096 quasi-uniform directions.
double hausdorff_distance(const Polytope& p, const Polytope& q);

/// True when the vertex lists agree as sets within tol.
bool same_vertex_set(const Polytope& p, const Polytope& q, double tol);

}  // namespace asymlab
