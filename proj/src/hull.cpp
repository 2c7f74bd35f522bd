#include "hull.hpp"

#include "asymlab/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

namespace asymlab::detail {

namespace {

using RidgeKey = std::array<int, kMaxDim - 1>;

// Unit vector orthogonal to the edge columns: Gram-Schmidt with one round of
// reorthogonalization, then the residual of the best coordinate axis. Edges
// are normalized first so short ones keep their relative precision.
Vec plane_normal(const Mat& edges, int dim) {
  std::array<std::array<double, kMaxDim>, kMaxDim> q{};
  int rank = 0;
  for (int k = 0; k < edges.cols(); ++k) {
    std::array<double, kMaxDim> v{};
    double len = 0.0;
    for (int t = 0; t < dim; ++t) len += edges(t, k) * edges(t, k);
    len = std::sqrt(len);
    if (!(len > 0.0)) continue;
    for (int t = 0; t < dim; ++t) v[t] = edges(t, k) / len;
    for (int pass = 0; pass < 2; ++pass) {
      for (int r = 0; r < rank; ++r) {
        double dot = 0.0;
        for (int t = 0; t < dim; ++t) dot += q[r][t] * v[t];
        for (int t = 0; t < dim; ++t) v[t] -= dot * q[r][t];
      }
    }
    double n2 = 0.0;
    for (int t = 0; t < dim; ++t) n2 += v[t] * v[t];
    if (!(n2 > 0.0)) continue;
    const double inv = 1.0 / std::sqrt(n2);
    for (int t = 0; t < dim; ++t) q[rank][t] = v[t] * inv;
    ++rank;
  }
  // axis with the smallest projection onto the span
  int axis = 0;
  double least = 1e300;
  for (int t = 0; t < dim; ++t) {
    double proj = 0.0;
    for (int r = 0; r < rank; ++r) proj += q[r][t] * q[r][t];
    if (proj < least) {
      least = proj;
      axis = t;
    }
  }
  std::array<double, kMaxDim> v{};
  v[axis] = 1.0;
  for (int pass = 0; pass < 2; ++pass) {
    for (int r = 0; r < rank; ++r) {
      double dot = 0.0;
      for (int t = 0; t < dim; ++t) dot += q[r][t] * v[t];
      for (int t = 0; t < dim; ++t) v[t] -= dot * q[r][t];
    }
  }
  Vec n(dim);
  for (int t = 0; t < dim; ++t) n[t] = v[t];
  return n.normalized();
}

void set_plane(HullFacet& f, std::span<const Vec> pts, int dim, const Vec& inside) {
  const Vec& origin = pts[f.verts[0]];
  Mat edges(dim, dim - 1);
  for (int k = 1; k < dim; ++k) edges.col(k - 1) = pts[f.verts[k]] - origin;
  f.normal = plane_normal(edges, dim);
  double off = 0.0;
  for (int k = 0; k < dim; ++k) off += f.normal.dot(pts[f.verts[k]]);
  f.offset = off / dim;
  if (f.normal.dot(inside) > f.offset) {
    f.normal = -f.normal;
    f.offset = -f.offset;
  }
}

// Greedy max-volume initial simplex via Gram-Schmidt residuals.
std::vector<int> initial_simplex(std::span<const Vec> pts, int dim, double eps) {
  const int n = static_cast<int>(pts.size());
  Vec lo = pts[0], hi = pts[0];
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  int axis = 0;
  (hi - lo).maxCoeff(&axis);
  int first = 0;
  for (int i = 1; i < n; ++i)
    if (pts[i][axis] < pts[first][axis]) first = i;

  std::vector<int> chosen{first};
  std::vector<Vec> basis;
  for (int k = 0; k < dim; ++k) {
    int best = -1;
    double best_dist = eps;
    Vec best_residual;
    for (int i = 0; i < n; ++i) {
      Vec r = pts[i] - pts[first];
      for (const auto& b : basis) r -= r.dot(b) * b;
      double d = r.norm();
      if (d > best_dist) {
        best_dist = d;
        best = i;
        best_residual = r;
      }
    }
    if (best < 0)
      throw Error(ErrorKind::DegenerateInput, "points span an affine subspace of dimension " +
                                                  std::to_string(k));
    // re-orthogonalize once for accuracy
    for (const auto& b : basis) best_residual -= best_residual.dot(b) * b;
    basis.push_back(best_residual.normalized());
    chosen.push_back(best);
  }
  return chosen;
}

RidgeKey ridge_key(const HullFacet& f, int dim, int skip) {
  RidgeKey key;
  key.fill(-1);
  int j = 0;
  for (int i = 0; i < dim; ++i)
    if (i != skip) key[j++] = f.verts[i];
  std::sort(key.begin(), key.begin() + (dim - 1));
  return key;
}

}  // namespace

double bbox_diameter(std::span<const Vec> points) {
  if (points.empty()) return 0.0;
  Vec lo = points[0], hi = points[0];
  for (const auto& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return (hi - lo).norm();
}

Vec hyperplane_normal(std::span<const Vec> points, const Vec& inside) {
  const int dim = static_cast<int>(points[0].size());
  Mat edges(dim, dim - 1);
  for (int k = 1; k < dim; ++k) edges.col(k - 1) = points[k] - points[0];
  Vec n = plane_normal(edges, dim);
  if (n.dot(inside - points[0]) > 0) n = -n;
  return n;
}

Hull quickhull(std::span<const Vec> pts, double eps) {
  if (pts.empty()) throw Error(ErrorKind::DegenerateInput, "no points");
  const int dim = static_cast<int>(pts[0].size());
  if (dim < 2 || dim > kMaxDim)
    throw Error(ErrorKind::InvalidArgument, "dimension must be in [2, 6]");
  const int npts = static_cast<int>(pts.size());
  if (npts < dim + 1)
    throw Error(ErrorKind::DegenerateInput, "need at least dim+1 points");

  const std::vector<int> simplex = initial_simplex(pts, dim, eps);
  Vec inside = Vec::Zero(dim);
  for (int i : simplex) inside += pts[i];
  inside /= (dim + 1);

  std::vector<HullFacet> facets;
  std::vector<char> alive;
  std::vector<std::vector<int>> outside;
  facets.reserve(4 * npts);

  for (int j = 0; j <= dim; ++j) {
    HullFacet f;
    int slot = 0;
    for (int k = 0; k <= dim; ++k) {
      if (k == j) continue;
      f.verts[slot] = simplex[k];
      // facet omitting simplex[j] meets facet omitting simplex[k] across verts[slot]
      f.neighbors[slot] = k;
      ++slot;
    }
    set_plane(f, pts, dim, inside);
    facets.push_back(f);
    alive.push_back(1);
    outside.emplace_back();
  }

  std::vector<char> in_simplex(npts, 0);
  for (int i : simplex) in_simplex[i] = 1;

  auto assign = [&](int p, std::span<const int> candidates) {
    int best = -1;
    double best_dist = eps;
    for (int fi : candidates) {
      const double d = facets[fi].normal.dot(pts[p]) - facets[fi].offset;
      if (d > best_dist) {
        best_dist = d;
        best = fi;
      }
    }
    if (best >= 0) outside[best].push_back(p);
  };

  {
    std::vector<int> all(dim + 1);
    std::iota(all.begin(), all.end(), 0);
    for (int p = 0; p < npts; ++p)
      if (!in_simplex[p]) assign(p, all);
  }

  std::vector<int> pending(dim + 1);
  std::iota(pending.begin(), pending.end(), 0);
  std::vector<int> visit_stamp(facets.size(), 0);
  int stamp = 0;

  std::vector<int> visible, stack, horizon_new;
  std::map<RidgeKey, std::pair<int, int>> open_ridges;

  while (!pending.empty()) {
    const int seed = pending.back();
    pending.pop_back();
    if (!alive[seed] || outside[seed].empty()) continue;

    int apex = outside[seed][0];
    double apex_dist = -1.0;
    for (int p : outside[seed]) {
      const double d = facets[seed].normal.dot(pts[p]) - facets[seed].offset;
      if (d > apex_dist) {
        apex_dist = d;
        apex = p;
      }
    }

    // Visible region by flood fill from the seed facet.
    ++stamp;
    visit_stamp.resize(facets.size(), 0);
    visible.clear();
    stack.assign(1, seed);
    visit_stamp[seed] = stamp;
    while (!stack.empty()) {
      const int fi = stack.back();
      stack.pop_back();
      visible.push_back(fi);
      for (int k = 0; k < dim; ++k) {
        const int nb = facets[fi].neighbors[k];
        if (visit_stamp[nb] == stamp || visit_stamp[nb] == -stamp) continue;
        const double d = facets[nb].normal.dot(pts[apex]) - facets[nb].offset;
        if (d > eps) {
          visit_stamp[nb] = stamp;
          stack.push_back(nb);
        } else {
          visit_stamp[nb] = -stamp;
        }
      }
    }

    horizon_new.clear();
    open_ridges.clear();
    for (int vi : visible) {
      for (int k = 0; k < dim; ++k) {
        const int nb = facets[vi].neighbors[k];
        if (visit_stamp[nb] == stamp) continue;
        HullFacet nf;
        nf.verts = facets[vi].verts;
        nf.verts[k] = apex;
        nf.neighbors.fill(-1);
        nf.neighbors[k] = nb;
        set_plane(nf, pts, dim, inside);
        const int id = static_cast<int>(facets.size());
        for (int s = 0; s < dim; ++s)
          if (facets[nb].neighbors[s] == vi) facets[nb].neighbors[s] = id;
        facets.push_back(nf);
        alive.push_back(1);
        outside.emplace_back();
        visit_stamp.push_back(0);
        horizon_new.push_back(id);
      }
    }

    for (int id : horizon_new) {
      for (int k = 0; k < dim; ++k) {
        if (facets[id].verts[k] == apex) continue;
        const RidgeKey key = ridge_key(facets[id], dim, k);
        auto it = open_ridges.find(key);
        if (it == open_ridges.end()) {
          open_ridges.emplace(key, std::make_pair(id, k));
        } else {
          const auto [other, slot] = it->second;
          facets[id].neighbors[k] = other;
          facets[other].neighbors[slot] = id;
          open_ridges.erase(it);
        }
      }
    }

    for (int vi : visible) {
      alive[vi] = 0;
      for (int p : outside[vi])
        if (p != apex) assign(p, horizon_new);
      outside[vi].clear();
      outside[vi].shrink_to_fit();
    }
    for (int id : horizon_new)
      if (!outside[id].empty()) pending.push_back(id);
  }

  Hull hull;
  hull.dim = dim;
  hull.interior = inside;
  std::vector<int> remap(facets.size(), -1);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (!alive[i]) continue;
    remap[i] = static_cast<int>(hull.facets.size());
    hull.facets.push_back(facets[i]);
  }
  std::vector<char> used(npts, 0);
  for (auto& f : hull.facets) {
    for (int k = 0; k < dim; ++k) {
      f.neighbors[k] = remap[f.neighbors[k]];
      used[f.verts[k]] = 1;
    }
  }
  for (int i = 0; i < npts; ++i)
    if (used[i]) hull.vertices.push_back(i);
  return hull;
}

}  // namespace asymlab::detail

namespace asymlab::detail {

bool refresh_hull(Hull& hull, std::span<const Vec> pts, double eps) {
  const int dim = hull.dim;
  Vec inside = Vec::Zero(dim);
  for (int v : hull.vertices) inside += pts[v];
  inside /= static_cast<double>(hull.vertices.size());
  for (auto& f : hull.facets) {
    set_plane(f, pts, dim, inside);
    if (!(f.normal.dot(inside) < f.offset - eps)) return false;
    for (const auto& p : pts)
      if (f.normal.dot(p) - f.offset > eps) return false;
  }
  hull.interior = inside;
  return true;
}

}  // namespace asymlab::detail
