#include "asymlab/error.hpp"
#include "asymlab/polytope.hpp"
#include "hull.hpp"
#include "lp.hpp"
#include "polytope_internal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

// Volume of an H-polytope by the cone-over-facets recursion
//   |P| = (1/d) * sum_j dist_j * |F_j|
// down to polygons, which are clipped directly. Nothing here hulls the primal
// vertices: near degenerate configurations they cluster, and slivers in the
// primal hull lose precision. The dual hull, used only to find which
// constraints bound each facet, stays well spread.

namespace asymlab::detail {

namespace {

using Normal = std::array<double, kMaxDim>;

struct Workspace {
  std::array<std::vector<double>, kMaxDim + 1> offsets;  // by face dimension
  std::vector<std::array<double, 2>> cur, next;
  std::vector<double> pair_area;  // 4D: polygon F_i ∩ F_j, NaN until computed
};

// Face of the parent on the hyperplane of parent row `pivot`, keeping the
// parent rows listed in `candidates`. Frame: a Householder reflection taking
// the pivot normal to a coordinate axis, which is then dropped.
FaceNode build_face(const std::vector<Normal>& normals, int d, int pivot,
                    const std::vector<int>& candidates) {
  FaceNode node;
  node.pivot = pivot;
  node.dim = d - 1;
  const Normal& u = normals[pivot];
  int axis = 0;
  for (int k = 1; k < d; ++k)
    if (std::abs(u[k]) > std::abs(u[axis])) axis = k;
  Normal v = u;
  v[axis] += u[axis] >= 0 ? 1.0 : -1.0;
  const double inv = 1.0 / (1.0 + std::abs(u[axis]));  // 2 / |v|^2

  for (int k : candidates) {
    if (k == pivot) continue;
    const Normal& a = normals[k];
    double along = 0.0, w = 0.0;
    for (int t = 0; t < d; ++t) {
      along += a[t] * u[t];
      w += a[t] * v[t];
    }
    w *= inv;
    FaceNode::Row row{k, along, 0.0, {}};
    double norm2 = 0.0;
    for (int t = 0, s = 0; t < d; ++t) {
      if (t == axis) continue;
      row.normal[s] = a[t] - w * v[t];
      norm2 += row.normal[s] * row.normal[s];
      ++s;
    }
    if (norm2 < 1e-20) {
      node.guards.push_back({k, along, along > 0 && k < pivot});
      continue;
    }
    const double len = std::sqrt(norm2);
    for (int s = 0; s < d - 1; ++s) row.normal[s] /= len;
    row.inv_len = 1.0 / len;
    node.rows.push_back(row);
  }
  if (node.dim > 2) {
    std::vector<Normal> sub;
    std::vector<int> all;
    for (std::size_t r = 0; r < node.rows.size(); ++r) {
      sub.push_back(node.rows[r].normal);
      all.push_back(static_cast<int>(r));
    }
    for (std::size_t r = 0; r < node.rows.size(); ++r)
      node.children.push_back(build_face(sub, node.dim, static_cast<int>(r), all));
  }
  return node;
}

double clipped_area(const FaceNode& node, const std::vector<double>& b, double box,
                    Workspace& ws) {
  // each cut adds at most one vertex
  const std::size_t cap = node.rows.size() + 4;
  if (ws.cur.size() < cap) {
    ws.cur.resize(cap);
    ws.next.resize(cap);
  }
  auto* cur = ws.cur.data();
  auto* next = ws.next.data();
  cur[0] = {-box, -box};
  cur[1] = {box, -box};
  cur[2] = {box, box};
  cur[3] = {-box, box};
  std::size_t m = 4;
  std::array<double, 2 * kMaxDim + 64> dist_small;
  std::vector<double> dist_big;
  double* dist = dist_small.data();
  if (cap > dist_small.size()) {
    dist_big.resize(cap);
    dist = dist_big.data();
  }
  for (std::size_t r = 0; r < node.rows.size(); ++r) {
    const double nx = node.rows[r].normal[0], ny = node.rows[r].normal[1], off = b[r];
    bool cuts = false;
    for (std::size_t j = 0; j < m; ++j) {
      dist[j] = nx * cur[j][0] + ny * cur[j][1] - off;
      cuts |= dist[j] > 0;
    }
    if (!cuts) continue;
    std::size_t k = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t jn = j + 1 == m ? 0 : j + 1;
      const double dp = dist[j], dq = dist[jn];
      if (dp <= 0) next[k++] = cur[j];
      if ((dp < 0 && dq > 0) || (dp > 0 && dq < 0)) {
        const double t = dp / (dp - dq);
        next[k++] = {cur[j][0] + t * (cur[jn][0] - cur[j][0]), cur[j][1] + t * (cur[jn][1] - cur[j][1])};
      }
    }
    std::swap(cur, next);
    m = k;
    if (m < 3) return 0.0;
  }
  double area = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& p = cur[j];
    const auto& q = cur[j + 1 == m ? 0 : j + 1];
    area += p[0] * q[1] - p[1] * q[0];
  }
  return std::max(0.0, 0.5 * area);
}

// Fills the face's offsets from the parent's; false when the face is empty.
bool face_offsets(const FaceNode& node, const double* parent, double tol,
                  std::vector<double>& out) {
  const double base = parent[node.pivot];
  for (const auto& g : node.guards) {
    const double c = parent[g.src] - base * g.along;
    if (c < -tol || (g.loses_tie && c <= tol)) return false;
  }
  out.resize(node.rows.size());
  for (std::size_t r = 0; r < node.rows.size(); ++r) {
    const auto& row = node.rows[r];
    out[r] = (parent[row.src] - base * row.along) * row.inv_len;
  }
  return true;
}

double face_volume(const FaceNode& node, double box, double tol, Workspace& ws) {
  const auto& b = ws.offsets[node.dim];
  if (node.dim == 2) return clipped_area(node, b, box, ws);
  double vol = 0.0;
  for (const auto& child : node.children) {
    if (!face_offsets(child, b.data(), tol, ws.offsets[child.dim])) continue;
    vol += b[child.pivot] * face_volume(child, box, tol, ws);
  }
  return vol / node.dim;
}

void build_structure(DualStructure& cache, std::span<const Halfspace> hs, const std::vector<double>& local,
                 int dim, bool antipodal) {
  PointList dual;
  dual.reserve(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) dual.push_back(hs[i].normal / local[i]);
  try {
    cache.hull = quickhull(dual, kGeomEps * bbox_diameter(dual));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateInput) throw Error(ErrorKind::Unbounded, "normals do not span");
    throw;
  }
  for (const auto& f : cache.hull.facets) {
    if (!(f.offset > 0.0)) throw Error(ErrorKind::Unbounded, "centre not interior to dual hull");
    Mat u(dim, dim);
    for (int k = 0; k < dim; ++k) u.row(k) = hs[f.verts[k]].normal.transpose();
    const Mat inv = u.inverse();
    std::array<double, kMaxDim * kMaxDim> flat{};
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) flat[r * dim + c] = inv(r, c);
    cache.inverse.push_back(flat);
  }
  if (dim == 2) return;

  // facet i is bounded by the constraints sharing a dual simplex with it
  std::vector<std::vector<int>> adjacent(hs.size());
  for (const auto& f : cache.hull.facets)
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        if (a != b) adjacent[f.verts[a]].push_back(f.verts[b]);
  std::vector<Normal> normals(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (int t = 0; t < dim; ++t) normals[i][t] = hs[i].normal[t];

  // A facet whose mirror image is also a hull vertex is counted twice and its
  // mirror skipped. Duplicate planes can leave a facet without its mirror.
  const int half = static_cast<int>(hs.size()) / 2;
  std::vector<char> is_vertex(hs.size(), 0);
  for (int i : cache.hull.vertices) is_vertex[i] = 1;
  for (int i : cache.hull.vertices) {
    double weight = 1.0;
    if (antipodal) {
      const int mirror = i < half ? i + half : i - half;
      if (is_vertex[mirror]) {
        if (i >= half) continue;
        weight = 2.0;
      }
    }
    auto& adj = adjacent[i];
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    cache.facets.push_back(build_face(normals, dim, i, adj));
    cache.weight.push_back(weight);
  }
}

// A doubled facet stands for itself and its mirror.
void credit(std::vector<double>& areas, int i, double weight, double area) {
  areas[i] = area;
  if (weight == 2.0) areas[i + areas.size() / 2] = area;
}

// Largest distance from `center` to a primal vertex of the cached structure,
// or -1 when some vertex violates a constraint and the structure is stale.
double cached_radius(const DualStructure& cache, std::span<const Halfspace> hs, const Vec& center,
                     double tol) {
  const int dim = static_cast<int>(center.size());
  const std::size_t m = hs.size();
  thread_local std::vector<double> normals, offsets;
  normals.resize(m * dim);
  offsets.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (int t = 0; t < dim; ++t) normals[i * dim + t] = hs[i].normal[t];
    offsets[i] = hs[i].offset;
  }
  double r2 = 0.0;
  for (std::size_t f = 0; f < cache.hull.facets.size(); ++f) {
    const auto& verts = cache.hull.facets[f].verts;
    const auto& inv = cache.inverse[f];
    std::array<double, kMaxDim> v{};
    for (int r = 0; r < dim; ++r) {
      double acc = 0.0;
      for (int c = 0; c < dim; ++c) acc += inv[r * dim + c] * offsets[verts[c]];
      v[r] = acc;
    }
    for (std::size_t i = 0; i < m; ++i) {
      double d = -offsets[i];
      for (int t = 0; t < dim; ++t) d += normals[i * dim + t] * v[t];
      if (d > tol) return -1.0;
    }
    double dist2 = 0.0;
    for (int t = 0; t < dim; ++t) dist2 += (v[t] - center[t]) * (v[t] - center[t]);
    r2 = std::max(r2, dist2);
  }
  return std::sqrt(r2);
}

// Lengths of the edges of a polygon given by local offsets b (centre at 0).
void edge_lengths(std::span<const Halfspace> hs, const std::vector<int>& rows,
                  const std::vector<double>& local, double tol, std::vector<double>& out) {
  for (int i : rows) {
    const Vec& u = hs[i].normal;
    const double tx = -u[1], ty = u[0];
    double lo = -std::numeric_limits<double>::infinity(), hi = -lo;
    bool empty = false;
    for (int j : rows) {
      if (j == i) continue;
      const Vec& w = hs[j].normal;
      const double slope = w[0] * tx + w[1] * ty;
      const double room = local[j] - local[i] * w.dot(u);
      if (std::abs(slope) < 1e-10) {
        if (room < -tol || (room <= tol && w.dot(u) > 0 && j < i)) empty = true;
        continue;
      }
      if (slope > 0)
        hi = std::min(hi, room / slope);
      else
        lo = std::max(lo, room / slope);
    }
    out[i] = empty ? 0.0 : std::max(0.0, hi - lo);
  }
}

}  // namespace

double halfspace_volume_about(std::span<const Halfspace> hs, const Vec& center,
                              const VolumeHints& hints) {
  const int dim = static_cast<int>(center.size());
  thread_local Workspace ws;

  std::vector<double> local(hs.size());
  double reach = 0.0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    local[i] = hs[i].offset - hs[i].normal.dot(center);
    reach = std::max(reach, local[i]);
  }
  for (double b : local)
    if (!(b > 1e-13 * reach)) return 0.0;

  DualCache fresh;
  DualCache& cache = hints.cache ? *hints.cache : fresh;
  auto& recent = cache.recent;
  double radius = -1.0;
  for (std::size_t k = 0; k < recent.size(); ++k) {
    radius = cached_radius(recent[k], hs, center, kGeomEps * reach);
    if (radius >= 0.0) {
      std::rotate(recent.begin(), recent.begin() + k, recent.begin() + k + 1);
      break;
    }
  }
  if (radius < 0.0) {
    DualStructure built;
    build_structure(built, hs, local, dim, hints.antipodal_pairs);
    radius = 0.0;
    for (const auto& f : built.hull.facets) radius = std::max(radius, 1.0 / f.offset);
    if (recent.size() == 8) recent.pop_back();
    recent.insert(recent.begin(), std::move(built));
  }
  const DualStructure* slot = &recent.front();
  const double box = 4.0 * radius;
  const double tol = 1e-12 * radius;

  std::vector<double>* areas = hints.facet_areas;
  if (areas) areas->assign(hs.size(), 0.0);

  if (dim == 2) {
    if (areas) edge_lengths(hs, slot->hull.vertices, local, tol, *areas);
    FaceNode all;
    for (int i : slot->hull.vertices)
      all.rows.push_back({i, 0.0, 1.0, {hs[i].normal[0], hs[i].normal[1]}});
    auto& b = ws.offsets[2];
    b.clear();
    for (int i : slot->hull.vertices) b.push_back(local[i]);
    return clipped_area(all, b, box, ws);
  }

  // In 4D every polygon is reached from both of its facets; clip it once.
  if (dim == 4) {
    const std::size_t m = hs.size();
    ws.pair_area.assign(m * m, std::numeric_limits<double>::quiet_NaN());
    double vol = 0.0;
    for (std::size_t f = 0; f < slot->facets.size(); ++f) {
      const FaceNode& face = slot->facets[f];
      auto& b3 = ws.offsets[3];
      if (!face_offsets(face, local.data(), tol, b3)) continue;
      const std::size_t i = face.pivot;
      double v3 = 0.0;
      for (const auto& child : face.children) {
        if (!face_offsets(child, b3.data(), tol, ws.offsets[2])) continue;
        const std::size_t j = face.rows[child.pivot].src;
        double& area = ws.pair_area[std::min(i, j) * m + std::max(i, j)];
        if (std::isnan(area)) area = clipped_area(child, ws.offsets[2], box, ws);
        v3 += b3[child.pivot] * area;
      }
      vol += slot->weight[f] * local[i] * v3 / 3.0;
      if (areas) credit(*areas, face.pivot, slot->weight[f], v3 / 3.0);
    }
    return vol / 4.0;
  }

  double vol = 0.0;
  for (std::size_t f = 0; f < slot->facets.size(); ++f) {
    const FaceNode& face = slot->facets[f];
    if (!face_offsets(face, local.data(), tol, ws.offsets[face.dim])) continue;
    const double area = face_volume(face, box, tol, ws);
    vol += slot->weight[f] * local[face.pivot] * area;
    if (areas) credit(*areas, face.pivot, slot->weight[f], area);
  }
  return vol / dim;
}

double halfspace_volume_areas(std::span<const Halfspace> hs, std::vector<double>& areas,
                              DualCache* cache) {
  areas.assign(hs.size(), 0.0);
  if (hs.empty()) return 0.0;
  const int dim = static_cast<int>(hs[0].normal.size());
  const auto ball = chebyshev_center(hs, dim);
  if (!ball) throw Error(ErrorKind::Unbounded, "normals do not positively span");
  double reach = 0.0;
  for (const auto& h : hs) reach = std::max(reach, h.offset - h.normal.dot(ball->center));
  if (!(ball->radius > 1e-13 * std::max(reach, 1e-300))) return 0.0;
  VolumeHints hints;
  hints.cache = cache;
  hints.facet_areas = &areas;
  return halfspace_volume_about(hs, ball->center, hints);
}

}  // namespace asymlab::detail

namespace asymlab {

double halfspace_volume(std::span<const Halfspace> input) {
  if (input.empty()) return 0.0;
  const int dim = static_cast<int>(input[0].normal.size());
  for (const auto& h : input)
    if (h.normal.size() != dim) throw Error(ErrorKind::DimensionMismatch, "mixed dimensions");
  const auto hs = detail::normalized(input);
  const auto ball = detail::chebyshev_center(hs, dim);
  if (!ball) throw Error(ErrorKind::Unbounded, "normals do not positively span");
  double reach = 0.0;
  for (const auto& h : hs) reach = std::max(reach, h.offset - h.normal.dot(ball->center));
  if (!(ball->radius > 1e-13 * std::max(reach, 1e-300))) return 0.0;
  return detail::halfspace_volume_about(hs, ball->center);
}

}  // namespace asymlab
