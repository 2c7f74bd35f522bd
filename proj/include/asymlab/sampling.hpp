#pragma once

#include "asymlab/polytope.hpp"

#include <cstdint>
#include <random>

namespace asymlab {

using Rng = std::mt19937_64;

/// Spherical Fibonacci lattice on S^2.
PointList fibonacci_sphere(int count);

/// Independent uniform points on S^{dim-1}.
PointList random_sphere(int dim, int count, Rng& rng);

/// Deterministic, well-spread directions: equal angles in the plane, the
/// Fibonacci lattice on S^2 and a fixed-seed uniform sample above that.
PointList quasi_uniform_directions(int dim, int count);

/// Hull of `count` standard Gaussian points, resampled until full-dimensional.
Polytope random_polytope(int dim, int count, Rng& rng);

/// Convex polygon with `count` vertices at random angles on a jittered circle.
Polytope random_polygon(int count, Rng& rng);

/// Surface area of the unit sphere S^{dim-1}.
double sphere_area(int dim);

}  // namespace asymlab
