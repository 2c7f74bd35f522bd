#pragma once

#include "asymlab/measures.hpp"
#include "asymlab/polytope.hpp"

#include <span>
#include <vector>

namespace asymlab {

/// Heights attached to unit directions: the halfspaces {<u_i, x> <= h_i}.
/// Also used for the nonnegative bumps f of wulff_deform.
struct SupportVector {
  PointList directions;
  std::vector<double> heights;
};

/// The largest polytope with support value <= h_i along each u_i. Directions
/// whose halfspace is redundant leave no facet.
Polytope wulff_shape(const SupportVector& s);

struct MinkowskiOptions {
  std::vector<double> initial_heights;  // empty means all ones
  double gradient_tol = 1e-10;          // relative to the largest weight
  int max_iterations = 20000;
};

struct MinkowskiStats {
  int iterations = 0;
  double gradient_norm = 0.0;   // sup norm at exit, relative to the largest weight
  double max_rel_residual = 0.0;  // facet areas of the result against the weights
  MeasureDiagnostics diagnostics;
};

/// a . h - log |W(h)| for the atoms of `s`; +infinity when W(h) is empty.
double minkowski_functional(const SurfaceMeasure& s, std::span<const double> heights);

/// The polytope, centroid at the origin, whose facet normals and areas are
/// the atoms of `s`. Gradient descent on minkowski_functional followed by a
/// rescale. Throws InfeasibleMeasure when `s` is not the surface measure of
/// any body and ConvergenceFailure when the iteration stalls.
Polytope solve_minkowski(const SurfaceMeasure& s, const MinkowskiOptions& opts = {},
                         MinkowskiStats* stats = nullptr);

/// Origin-symmetric body with surface measure (S_K + S_{-K}) / 2.
Polytope blaschke_body(const Polytope& k);

/// W(h_K + t f) over K's facet normals together with f's directions; f is
/// zero off its own directions. With `require_even`, f must carry equal
/// weights on u and -u, otherwise InvalidArgument.
Polytope wulff_deform(const Polytope& k, const SupportVector& f, double t, bool require_even = false);

struct DerivativeReport {
  std::vector<double> steps;       // t values
  std::vector<double> quotients;   // (|K_t| - |K|) / t
  double extrapolated = 0.0;
  double predicted = 0.0;          // sum of f(u) w over the atoms of S_K
  double rel_error = 0.0;
};

/// Compares the one-sided derivative of t -> |K_t(f)| at 0, by Richardson
/// extrapolation of difference quotients at t = 1e-2 ... 1e-6, with the
/// integral of f against S_K. When that integral is zero the error is taken
/// relative to sum of max(f) w instead.
DerivativeReport wulff_derivative_check(const Polytope& k, const SupportVector& f);

}  // namespace asymlab
