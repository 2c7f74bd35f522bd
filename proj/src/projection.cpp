#include "asymlab/projection.hpp"

#include "asymlab/error.hpp"
#include "asymlab/sampling.hpp"

#include <cmath>
#include <functional>

namespace asymlab {

double Zonotope::support(const Vec& u) const {
  double h = 0.0;
  for (const auto& g : generators) h += std::abs(g.dot(u));
  return h;
}

bool Zonotope::degenerate() const {
  if (static_cast<int>(generators.size()) < dim) return true;
  Eigen::MatrixXd g(dim, generators.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    g.col(i) = generators[i];
    scale = std::max(scale, generators[i].norm());
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
  lu.setThreshold(1e-12);
  return !(scale > 0.0) || lu.rank() < dim;
}

Zonotope projection_body(const Polytope& k) {
  Zonotope z;
  z.dim = k.dim();
  const auto& facets = k.facets();
  std::vector<char> used(facets.size(), 0);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (used[i]) continue;
    const Vec& u = facets[i].plane.normal;
    double w = facets[i].area;
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if (!used[j] && (facets[j].plane.normal + u).norm() <= kAngleMerge) {
        w += facets[j].area;
        used[j] = 1;
      }
    }
    z.generators.push_back(0.5 * w * u);
  }
  return z;
}

double zonotope_volume(const Zonotope& z) {
  const int n = z.dim;
  const int m = static_cast<int>(z.generators.size());
  if (n < 1 || n > 5) throw Error(ErrorKind::UnsupportedDim, "zonotope_volume needs 1 <= n <= 5");
  if (m > 64) throw Error(ErrorKind::TooLarge, "more than 64 generators");
  if (m < n) return 0.0;
  double subsets = 1.0;
  for (int i = 0; i < n; ++i) subsets = subsets * (m - i) / (i + 1);
  if (subsets > 1e7) throw Error(ErrorKind::TooLarge, "too many generator subsets");

  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  Mat a(n, n);
  double sum = 0.0;
  for (;;) {
    for (int c = 0; c < n; ++c) a.col(c) = z.generators[idx[c]];
    sum += std::abs(a.determinant());
    int i = n - 1;
    while (i >= 0 && idx[i] == m - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::ldexp(sum, n);
}

Polytope zonotope_polytope(const Zonotope& z) {
  if (z.degenerate()) throw Error(ErrorKind::DegenerateZonotope, "generators do not span");
  PointList pts{Vec::Zero(z.dim)};
  for (const auto& g : z.generators) {
    PointList next;
    next.reserve(2 * pts.size());
    for (const auto& p : pts) {
      next.push_back(p + g);
      next.push_back(p - g);
    }
    // hull only once the points span, then keep just its vertices
    Eigen::MatrixXd span(z.dim, next.size());
    for (std::size_t i = 0; i < next.size(); ++i) span.col(i) = next[i] - next[0];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(span);
    lu.setThreshold(1e-12);
    pts = lu.rank() == z.dim ? convex_hull(next).vertices() : next;
  }
  return convex_hull(pts);
}

double schneider_P(const Polytope& k) {
  return zonotope_volume(projection_body(k)) / std::pow(k.volume(), k.dim() - 1);
}

Estimate polar_volume(const Zonotope& z, int samples, std::uint64_t seed) {
  if (samples < 2) throw Error(ErrorKind::InvalidArgument, "need at least two samples");
  if (z.degenerate()) throw Error(ErrorKind::DegenerateZonotope, "polar of a flat zonotope is unbounded");
  const int n = z.dim;
  PointList dirs;
  if (n == 3) {
    dirs = fibonacci_sphere(samples);
  } else {
    Rng rng(seed);
    dirs = random_sphere(n, samples, rng);
  }
  double mean = 0.0, m2 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double h = z.support(dirs[i]);
    if (!(h > 0.0)) throw Error(ErrorKind::DegenerateZonotope, "support vanishes");
    const double x = std::pow(h, -n);
    // Welford
    const double delta = x - mean;
    mean += delta / (i + 1);
    m2 += delta * (x - mean);
  }
  const double factor = sphere_area(n) / n;
  const double sd = std::sqrt(m2 / (samples - 1));
  return {factor * mean, factor * sd / std::sqrt(static_cast<double>(samples))};
}

Estimate schneider_R(const Polytope& k, int samples, std::uint64_t seed) {
  Estimate e = polar_volume(projection_body(k), samples, seed);
  const double f = std::pow(k.volume(), k.dim() - 1);
  return {e.value * f, e.stderr_ * f};
}

namespace {

Homothety compare_supports(int dim, const std::function<double(const Vec&)>& hp,
                           const std::function<double(const Vec&)>& hq, double scale, double tol) {
  Homothety r;
  r.scale = scale;
  double top = 0.0, gap = 0.0;
  for (const auto& u : quasi_uniform_directions(dim, 256)) {
    const double a = hp(u);
    top = std::max(top, std::abs(a));
    gap = std::max(gap, std::abs(a - scale * hq(u)));
  }
  r.max_gap = top > 0.0 ? gap / top : gap;
  r.homothetic = r.max_gap <= tol;
  return r;
}

}  // namespace

Homothety homothety_check(const Polytope& p, const Polytope& q, double tol) {
  if (p.dim() != q.dim()) throw Error(ErrorKind::DimensionMismatch, "homothety_check");
  const Vec cp = p.centroid(), cq = q.centroid();
  const double scale = std::pow(p.volume() / q.volume(), 1.0 / p.dim());
  Homothety r = compare_supports(
      p.dim(), [&](const Vec& u) { return support(p, u) - u.dot(cp); },
      [&](const Vec& u) { return support(q, u) - u.dot(cq); }, scale, tol);
  r.shift = cp - scale * cq;
  return r;
}

Homothety homothety_check(const Zonotope& p, const Zonotope& q, double tol) {
  if (p.dim != q.dim) throw Error(ErrorKind::DimensionMismatch, "homothety_check");
  const double vq = zonotope_volume(q);
  if (!(vq > 0.0)) throw Error(ErrorKind::DegenerateZonotope, "second zonotope is flat");
  const double scale = std::pow(zonotope_volume(p) / vq, 1.0 / p.dim);
  Homothety r = compare_supports(
      p.dim, [&](const Vec& u) { return p.support(u); }, [&](const Vec& u) { return q.support(u); },
      scale, tol);
  r.shift = Vec::Zero(p.dim);
  return r;
}

}  // namespace asymlab
