#pragma once

#include "asymlab/polytope.hpp"
#include "hull.hpp"

#include <array>
#include <optional>
#include <vector>

namespace asymlab {

/// Hull of `points`; facets whose normal and offset match an entry of `snap`
/// take that halfspace verbatim.
Polytope build_polytope(std::span<const Vec> points, std::span<const Halfspace> snap);

namespace detail {

/// intersect_halfspaces without the positive-spanning precheck.
Polytope intersect_spanning(std::span<const Halfspace> hs);

/// Normalizes each normal, scaling its offset to match.
std::vector<Halfspace> normalized(std::span<const Halfspace> hs);

/// A face of a face of ... of an H-polytope, down to polygons. Normals are
/// stored in an orthonormal frame of the face; offsets are not, since they are
/// the only part that changes between calls. A row's offset is
///   (b[src] - b[pivot] * along) * inv_len
/// in terms of the parent's offsets b, where pivot is the parent row whose
/// hyperplane carries this face.
struct FaceNode {
  struct Row {
    int src;
    double along, inv_len;
    std::array<double, kMaxDim> normal;
  };
  // parent rows parallel to the pivot: they only decide whether the face is empty
  struct Guard {
    int src;
    double along;
    bool loses_tie;  // coincident planes count for the lower index only
  };
  int pivot = 0;
  int dim = 0;
  std::vector<Row> rows;
  std::vector<Guard> guards;
  std::vector<FaceNode> children;  // one per row while dim > 2
};

/// Dual hull kept between calls. Each dual facet is a primal vertex, the
/// solution of its constraints taken as equalities; with the normals fixed only
/// the offsets move, so the inverses are stored and the structure stays valid
/// while every such vertex satisfies all constraints.
struct DualStructure {
  Hull hull;
  // per dual facet: inverse of the matrix of its constraint normals, row-major
  std::vector<std::array<double, kMaxDim * kMaxDim>> inverse;
  std::vector<FaceNode> facets;
  std::vector<double> weight;  // per entry of facets
};

/// Structures seen recently, newest first. Searches tend to move back and
/// forth between a few combinatorial types.
struct DualCache {
  std::vector<DualStructure> recent;
};

struct VolumeHints {
  /// hs[i + m/2] is hs[i] reflected through the centre, so only the first
  /// half of the facets need their areas.
  bool antipodal_pairs = false;
  /// Dual hull from a previous call on the same constraint indices; reused
  /// while it stays valid and replaced otherwise.
  DualCache* cache = nullptr;
  /// When set, receives the (n-1)-volume of the facet on each constraint,
  /// zero for redundant ones. Coincident planes credit the lower index.
  std::vector<double>* facet_areas = nullptr;
};

/// halfspace_volume with a known interior point in place of the Chebyshev
/// centre. Normals must be unit; returns 0 when `center` is not interior.
double halfspace_volume_about(std::span<const Halfspace> hs, const Vec& center,
                              const VolumeHints& hints = {});

/// Volume and facet areas of {x : <u_i, x> <= k_i} for unit normals that
/// positively span; centred at the Chebyshev centre. Zero volume and areas
/// when there is no interior.
double halfspace_volume_areas(std::span<const Halfspace> hs, std::vector<double>& areas,
                              DualCache* cache = nullptr);

}  // namespace detail
}  // namespace asymlab
