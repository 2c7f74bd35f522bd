#include "asymlab/sampling.hpp"

#include "asymlab/error.hpp"

#include <cmath>
#include <numbers>

namespace asymlab {

PointList fibonacci_sphere(int count) {
  PointList pts;
  pts.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    Vec p(3);
    p << r * std::cos(phi), r * std::sin(phi), z;
    pts.push_back(p);
  }
  return pts;
}

PointList random_sphere(int dim, int count, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  PointList pts;
  pts.reserve(count);
  while (static_cast<int>(pts.size()) < count) {
    Vec p(dim);
    for (int d = 0; d < dim; ++d) p[d] = gauss(rng);
    const double n = p.norm();
    if (n < 1e-12) continue;
    pts.push_back(p / n);
  }
  return pts;
}

PointList quasi_uniform_directions(int dim, int count) {
  if (dim == 2) {
    PointList pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) {
      const double t = 2.0 * std::numbers::pi * (i + 0.5) / count;
      Vec p(2);
      p << std::cos(t), std::sin(t);
      pts.push_back(p);
    }
    return pts;
  }
  if (dim == 3) return fibonacci_sphere(count);
  Rng rng(0x5eed5eedULL + dim);
  return random_sphere(dim, count, rng);
}

Polytope random_polytope(int dim, int count, Rng& rng) {
  if (count < dim + 1) throw Error(ErrorKind::InvalidArgument, "too few points for a polytope");
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    PointList pts;
    for (int i = 0; i < count; ++i) {
      Vec p(dim);
      for (int d = 0; d < dim; ++d) p[d] = gauss(rng);
      pts.push_back(p);
    }
    try {
      Polytope p = convex_hull(pts);
      if (p.volume() > 1e-6) return p;
    } catch (const Error&) {
    }
  }
}

Polytope random_polygon(int count, Rng& rng) {
  if (count < 3) throw Error(ErrorKind::InvalidArgument, "polygon needs three vertices");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    PointList pts;
    for (int i = 0; i < count; ++i) {
      const double t = 2.0 * std::numbers::pi * unit(rng);
      const double r = 0.7 + 0.6 * unit(rng);
      Vec p(2);
      p << r * std::cos(t), r * std::sin(t);
      pts.push_back(p);
    }
    try {
      Polytope p = convex_hull(pts);
      if (p.volume() > 1e-3) return p;
    } catch (const Error&) {
    }
  }
}

double sphere_area(int dim) {
  return 2.0 * std::pow(std::numbers::pi, dim / 2.0) / std::tgamma(dim / 2.0);
}

}  // namespace asymlab
