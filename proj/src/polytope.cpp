#include "asymlab/polytope.hpp"

#include "asymlab/error.hpp"
#include "asymlab/sampling.hpp"
#include "hull.hpp"
#include "lp.hpp"
#include "polytope_internal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace asymlab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

double simplex_area(std::span<const Vec> pts, const detail::HullFacet& f, int dim) {
  Mat m(dim, dim);
  m.col(0) = f.normal;
  for (int k = 1; k < dim; ++k) m.col(k) = pts[f.verts[k]] - pts[f.verts[0]];
  return std::abs(m.determinant()) / factorial(dim - 1);
}

double cone_volume(std::span<const Vec> pts, const std::array<int, kMaxDim>& verts,
                   const Vec& apex, int dim) {
  Mat m(dim, dim);
  for (int k = 0; k < dim; ++k) m.col(k) = pts[verts[k]] - apex;
  return std::abs(m.determinant()) / factorial(dim);
}

struct FacetGroup {
  Vec normal;
  double area = 0.0;
  std::vector<int> verts;  // input indices
  std::vector<int> members;
};

std::vector<FacetGroup> group_coplanar(const detail::Hull& hull, std::span<const Vec> pts) {
  const int dim = hull.dim;
  const int nf = static_cast<int>(hull.facets.size());
  UnionFind uf(nf);
  for (int i = 0; i < nf; ++i) {
    for (int k = 0; k < dim; ++k) {
      const int j = hull.facets[i].neighbors[k];
      if ((hull.facets[i].normal - hull.facets[j].normal).norm() < kAngleMerge) uf.unite(i, j);
    }
  }
  std::vector<int> group_of(nf, -1);
  std::vector<FacetGroup> groups;
  for (int i = 0; i < nf; ++i) {
    const int root = uf.find(i);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<int>(groups.size());
      groups.emplace_back();
      groups.back().normal = Vec::Zero(dim);
    }
    FacetGroup& g = groups[group_of[root]];
    const double a = simplex_area(pts, hull.facets[i], dim);
    g.area += a;
    g.normal += a * hull.facets[i].normal;
    g.members.push_back(i);
    for (int k = 0; k < dim; ++k) g.verts.push_back(hull.facets[i].verts[k]);
  }
  for (auto& g : groups) {
    if (g.normal.norm() > 0) {
      g.normal.normalize();
    } else {
      g.normal = hull.facets[g.members[0]].normal;
    }
    std::sort(g.verts.begin(), g.verts.end());
    g.verts.erase(std::unique(g.verts.begin(), g.verts.end()), g.verts.end());
  }
  return groups;
}

// A boundary point is a vertex iff the normals of the facets through it span R^n.
std::vector<char> extreme_flags(const detail::Hull& hull, const std::vector<FacetGroup>& groups,
                                int npts) {
  const int dim = hull.dim;
  std::vector<std::vector<int>> incident(npts);
  for (int g = 0; g < static_cast<int>(groups.size()); ++g)
    for (int v : groups[g].verts) incident[v].push_back(g);
  std::vector<char> extreme(npts, 0);
  for (int v : hull.vertices) {
    const auto& inc = incident[v];
    if (static_cast<int>(inc.size()) < dim) continue;
    Eigen::MatrixXd normals(inc.size(), dim);
    for (std::size_t r = 0; r < inc.size(); ++r) normals.row(r) = groups[inc[r]].normal.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(normals);
    extreme[v] = svd.singularValues()[dim - 1] > 1e-10;
  }
  return extreme;
}

}  // namespace

Polytope build_polytope(std::span<const Vec> input, std::span<const Halfspace> snap) {
  if (input.empty()) throw Error(ErrorKind::DegenerateInput, "no points");
  const int dim = static_cast<int>(input[0].size());
  for (const auto& p : input) {
    if (p.size() != dim) throw Error(ErrorKind::DimensionMismatch, "points of mixed dimension");
    if (!p.allFinite()) throw Error(ErrorKind::InvalidArgument, "non-finite coordinate");
  }
  const double diam = detail::bbox_diameter(input);
  const double eps = kGeomEps * diam;

  PointList pts(input.begin(), input.end());
  detail::Hull hull;
  std::vector<FacetGroup> groups;
  for (int attempt = 0;; ++attempt) {
    hull = detail::quickhull(pts, eps);
    groups = group_coplanar(hull, pts);
    const auto extreme = extreme_flags(hull, groups, static_cast<int>(pts.size()));
    PointList kept;
    for (int v : hull.vertices)
      if (extreme[v]) kept.push_back(pts[v]);
    if (kept.size() == hull.vertices.size() || attempt == 3) break;
    pts = std::move(kept);
  }

  Polytope poly;
  poly.dim_ = dim;
  std::vector<int> remap(pts.size(), -1);
  for (int v : hull.vertices) {
    remap[v] = static_cast<int>(poly.vertices_.size());
    poly.vertices_.push_back(pts[v]);
  }
  poly.diameter_ = detail::bbox_diameter(poly.vertices_);
  poly.interior_ = Vec::Zero(dim);
  for (const auto& v : poly.vertices_) poly.interior_ += v;
  poly.interior_ /= static_cast<double>(poly.vertices_.size());

  for (const auto& g : groups) {
    Facet f;
    f.area = g.area;
    f.plane.normal = g.normal;
    f.plane.offset = -std::numeric_limits<double>::infinity();
    for (int v : g.verts) {
      f.vertices.push_back(remap[v]);
      f.plane.offset = std::max(f.plane.offset, g.normal.dot(pts[v]));
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& h : snap) {
      if ((h.normal - f.plane.normal).norm() > 1e-7) continue;
      const double gap = std::abs(h.offset - f.plane.offset);
      if (gap < best && gap <= 1e-6 * std::max(1.0, diam)) {
        best = gap;
        f.plane = h;
      }
    }
    poly.facets_.push_back(std::move(f));
  }

  double vol = 0.0;
  for (const auto& hf : hull.facets) {
    std::array<int, kMaxDim> s{};
    for (int k = 0; k < dim; ++k) s[k] = remap[hf.verts[k]];
    poly.simplices_.push_back(s);
    vol += cone_volume(poly.vertices_, s, poly.interior_, dim);
  }
  poly.volume_ = vol;
  return poly;
}

Vec Polytope::centroid() const {
  Vec acc = Vec::Zero(dim_);
  double total = 0.0;
  for (const auto& s : simplices_) {
    const double v = cone_volume(vertices_, s, interior_, dim_);
    Vec c = interior_;
    for (int k = 0; k < dim_; ++k) c += vertices_[s[k]];
    acc += v * c / (dim_ + 1);
    total += v;
  }
  return acc / total;
}

Mat Polytope::covariance() const {
  // integral of x x^T over a simplex = vol/((n+1)(n+2)) (sum w w^T + (sum w)(sum w)^T)
  const Vec mu = centroid();
  Mat acc = Mat::Zero(dim_, dim_);
  double total = 0.0;
  for (const auto& s : simplices_) {
    const double v = cone_volume(vertices_, s, interior_, dim_);
    Vec sum = interior_ - mu;
    Mat outer = sum * sum.transpose();
    for (int k = 0; k < dim_; ++k) {
      const Vec w = vertices_[s[k]] - mu;
      sum += w;
      outer += w * w.transpose();
    }
    acc += v / ((dim_ + 1.0) * (dim_ + 2.0)) * (outer + sum * sum.transpose());
    total += v;
  }
  return acc / total;
}

std::vector<Halfspace> Polytope::halfspaces() const {
  std::vector<Halfspace> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.push_back(f.plane);
  return out;
}

double SurfaceMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms) m += a.weight;
  return m;
}

Vec SurfaceMeasure::centroid() const {
  Vec c = Vec::Zero(dim);
  for (const auto& a : atoms) c += a.weight * a.normal;
  return c;
}

Polytope convex_hull(std::span<const Vec> points) { return build_polytope(points, {}); }

namespace detail {

std::vector<Halfspace> normalized(std::span<const Halfspace> hs) {
  std::vector<Halfspace> out;
  out.reserve(hs.size());
  for (const auto& h : hs) {
    const double n = h.normal.norm();
    if (!(n > 0.0) || !std::isfinite(h.offset))
      throw Error(ErrorKind::InvalidArgument, "halfspace with zero or non-finite normal");
    out.push_back({h.normal / n, h.offset / n});
  }
  return out;
}

namespace {

// Vertices of the intersection, or nullopt when it has no interior.
std::optional<PointList> halfspace_vertices(std::span<const Halfspace> hs, int dim) {
  const auto ball = chebyshev_center(hs, dim);
  if (!ball) throw Error(ErrorKind::Unbounded, "normals do not positively span");
  double reach = 0.0;
  for (const auto& h : hs) reach = std::max(reach, h.offset - h.normal.dot(ball->center));
  if (!(ball->radius > 1e-13 * std::max(reach, 1e-300))) return std::nullopt;

  PointList dual;
  dual.reserve(hs.size());
  for (const auto& h : hs) dual.push_back(h.normal / (h.offset - h.normal.dot(ball->center)));
  const Hull dh = quickhull(dual, kGeomEps * bbox_diameter(dual));
  PointList verts;
  verts.reserve(dh.facets.size());
  for (const auto& f : dh.facets) {
    if (!(f.offset > 0.0)) throw Error(ErrorKind::Unbounded, "origin not interior to dual hull");
    verts.push_back(ball->center + f.normal / f.offset);
  }
  return verts;
}

}  // namespace

Polytope intersect_spanning(std::span<const Halfspace> input) {
  if (input.empty()) throw Error(ErrorKind::Unbounded, "no halfspaces");
  const int dim = static_cast<int>(input[0].normal.size());
  const auto hs = normalized(input);
  auto verts = halfspace_vertices(hs, dim);
  if (!verts) throw Error(ErrorKind::Empty, "halfspace intersection has no interior");
  return build_polytope(*verts, hs);
}

}  // namespace detail

Polytope intersect_halfspaces(std::span<const Halfspace> input) {
  if (input.empty()) throw Error(ErrorKind::Unbounded, "no halfspaces");
  const int dim = static_cast<int>(input[0].normal.size());
  for (const auto& h : input)
    if (h.normal.size() != dim) throw Error(ErrorKind::DimensionMismatch, "mixed dimensions");
  const auto hs = detail::normalized(input);
  // Positive spanning <=> origin strictly inside the hull of the normals.
  PointList normals;
  for (const auto& h : hs) normals.push_back(h.normal);
  try {
    const detail::Hull nh = detail::quickhull(normals, 1e-12);
    for (const auto& f : nh.facets)
      if (!(f.offset > 1e-12)) throw Error(ErrorKind::Unbounded, "normals do not positively span");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateInput)
      throw Error(ErrorKind::Unbounded, "normals do not span the space");
    throw;
  }
  return detail::intersect_spanning(hs);
}


double volume(const Polytope& p) { return p.volume(); }

double support(const Polytope& p, const Vec& u) {
  if (u.size() != p.dim()) throw Error(ErrorKind::DimensionMismatch, "direction dimension");
  if (!(u.norm() > 0.0)) throw Error(ErrorKind::ZeroDirection, "support of zero direction");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : p.vertices()) best = std::max(best, u.dot(v));
  return best;
}

SurfaceMeasure surface_area_measure(const Polytope& p) {
  SurfaceMeasure m;
  m.dim = p.dim();
  for (const auto& f : p.facets())
    if (f.area > 0.0) m.atoms.push_back({f.plane.normal, f.area});
  return m;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw Error(ErrorKind::DimensionMismatch, "minkowski_sum");
  PointList sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return convex_hull(sums);
}

std::optional<Polytope> intersect(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw Error(ErrorKind::DimensionMismatch, "intersect");
  std::vector<Halfspace> hs = p.halfspaces();
  const auto qh = q.halfspaces();
  hs.insert(hs.end(), qh.begin(), qh.end());
  try {
    Polytope r = detail::intersect_spanning(hs);
    if (r.volume() < 1e-14 * std::min(p.volume(), q.volume())) return std::nullopt;
    return r;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Empty || e.kind() == ErrorKind::DegenerateInput) return std::nullopt;
    throw;
  }
}

Polytope affine_map(const Polytope& p, const Mat& a, const Vec& b) {
  const int n = p.dim();
  if (a.rows() != n || a.cols() != n || b.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "affine_map");
  const double det = a.determinant();
  if (!(std::abs(det) > 1e-14 * std::pow(std::max(a.norm(), 1e-300), n)))
    throw Error(ErrorKind::SingularMatrix, "affine_map with singular matrix");
  PointList img;
  img.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) img.push_back(a * v + b);
  return convex_hull(img);
}

Polytope translate(const Polytope& p, const Vec& b) {
  if (b.size() != p.dim()) throw Error(ErrorKind::DimensionMismatch, "translate");
  Polytope r = p;
  for (auto& v : r.vertices_) v += b;
  for (auto& f : r.facets_) f.plane.offset += f.plane.normal.dot(b);
  r.interior_ += b;
  return r;
}

Polytope negate(const Polytope& p) {
  Polytope r = p;
  for (auto& v : r.vertices_) v = -v;
  for (auto& f : r.facets_) f.plane.normal = -f.plane.normal;
  r.interior_ = -r.interior_;
  return r;
}

Polytope scale(const Polytope& p, double s) {
  if (!(s > 0.0)) throw Error(ErrorKind::InvalidArgument, "scale factor must be positive");
  Polytope r = p;
  for (auto& v : r.vertices_) v *= s;
  for (auto& f : r.facets_) {
    f.plane.offset *= s;
    f.area *= std::pow(s, p.dim() - 1);
  }
  r.interior_ *= s;
  r.volume_ *= std::pow(s, p.dim());
  r.diameter_ *= s;
  return r;
}

namespace {

const Vec& argmax_vertex(const Polytope& p, const Vec& u) {
  std::size_t best = 0;
  double val = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const double d = u.dot(p.vertices()[i]);
    if (d > val) {
      val = d;
      best = i;
    }
  }
  return p.vertices()[best];
}

double hausdorff_planar(const Polytope& p, const Polytope& q) {
  constexpr double kTwoPi = 6.283185307179586;
  std::vector<double> breaks{0.0, kTwoPi};
  for (const Polytope* body : {&p, &q})
    for (const auto& f : body->facets()) {
      double a = std::atan2(f.plane.normal[1], f.plane.normal[0]);
      if (a < 0) a += kTwoPi;
      breaks.push_back(a);
    }
  std::sort(breaks.begin(), breaks.end());
  auto dir = [](double t) {
    Vec u(2);
    u << std::cos(t), std::sin(t);
    return u;
  };
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (b - a <= 0.0) continue;
    const Vec mid = dir(0.5 * (a + b));
    const Vec d = argmax_vertex(p, mid) - argmax_vertex(q, mid);
    double cand[4] = {a, b, std::atan2(d[1], d[0]), std::atan2(d[1], d[0]) + kTwoPi / 2};
    for (double t : cand) {
      for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
        const double s = t + shift;
        if (s < a || s > b) continue;
        worst = std::max(worst, std::abs(d.dot(dir(s))));
      }
    }
  }
  return worst;
}

}  // namespace

double hausdorff_distance(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw Error(ErrorKind::DimensionMismatch, "hausdorff_distance");
  if (p.dim() == 2) return hausdorff_planar(p, q);
  PointList dirs = quasi_uniform_directions(p.dim(), 4096);
  for (const Polytope* body : {&p, &q})
    for (const auto& f : body->facets()) dirs.push_back(f.plane.normal);
  double worst = 0.0;
  for (const auto& u : dirs) worst = std::max(worst, std::abs(support(p, u) - support(q, u)));
  return worst;
}

bool same_vertex_set(const Polytope& p, const Polytope& q, double tol) {
  if (p.dim() != q.dim() || p.vertices().size() != q.vertices().size()) return false;
  for (const auto& v : p.vertices()) {
    bool found = false;
    for (const auto& w : q.vertices())
      if ((v - w).norm() <= tol) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace asymlab
