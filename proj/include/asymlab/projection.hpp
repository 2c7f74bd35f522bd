#pragma once

#include "asymlab/polytope.hpp"

#include <cstdint>

namespace asymlab {

/// Sum of the segments [-g_i, g_i].
struct Zonotope {
  int dim = 0;
  PointList generators;

  /// sum of |<g_i, u>|
  double support(const Vec& u) const;
  /// Generators fail to span the space, so the volume is zero.
  bool degenerate() const;
};

/// Projection body of K: one generator (w/2) u per facet normal u with area w,
/// the atoms at u and -u folded into one generator.
Zonotope projection_body(const Polytope& k);

/// 2^n times the sum over n-subsets of generators of |det|. Throws
/// UnsupportedDim above n = 5 and TooLarge past 64 generators or 10^7 subsets.
double zonotope_volume(const Zonotope& z);

/// Explicit vertices, by summing the segments one at a time.
Polytope zonotope_polytope(const Zonotope& z);

/// |Pi K| / |K|^{n-1}
double schneider_P(const Polytope& k);

struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
};

/// Volume of the polar body, (|S^{n-1}|/n) * mean of h_Z(u)^{-n} over the
/// sphere. Directions: the Fibonacci lattice in n = 3, uniform draws from
/// `seed` otherwise. The error is the sample standard deviation over sqrt(N)
/// in both cases. Throws DegenerateZonotope when h_Z vanishes somewhere.
Estimate polar_volume(const Zonotope& z, int samples = 1 << 16, std::uint64_t seed = 0);

/// |polar of Pi K| * |K|^{n-1}
Estimate schneider_R(const Polytope& k, int samples = 1 << 16, std::uint64_t seed = 0);

struct Homothety {
  bool homothetic = false;
  double scale = 0.0;  // P is about scale * Q + shift
  Vec shift;
  double max_gap = 0.0;  // worst support difference after matching, relative to max h_P
};

/// Recentres both at their centroids, scales Q to P's volume and compares
/// support functions on 256 quasi-uniform directions; `tol` is relative to
/// the largest support value of P.
Homothety homothety_check(const Polytope& p, const Polytope& q, double tol);

/// The same for zonotopes, which are already centred at the origin.
Homothety homothety_check(const Zonotope& p, const Zonotope& q, double tol);

}  // namespace asymlab
