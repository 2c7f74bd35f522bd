#pragma once

#include "asymlab/polytope.hpp"

#include <span>

namespace asymlab {

/// V_1(L, K) = (1/n) * sum over atoms of S_L of h_K(u) w.
double mixed_volume_v1(const Polytope& l, const Polytope& k);

/// V_1(L, K) - |K|^{1/n} |L|^{(n-1)/n}; nonnegative up to rounding, zero for homothets.
double minkowski_inequality_gap(const Polytope& l, const Polytope& k);

/// Combines atoms whose normals are within kAngleMerge, summing weights.
SurfaceMeasure merge_atoms(int dim, std::span<const Atom> atoms);

/// (S_K + S_{-K}) / 2, the surface area measure of the Blaschke body.
SurfaceMeasure blaschke_measure(const Polytope& k);

struct MeasureDiagnostics {
  int dim = 0;
  double total_mass = 0.0;
  double centroid_norm = 0.0;
  int rank = 0;            // dimension of the span of the support
  bool closed = false;     // centroid_norm <= 1e-8 * total_mass
  bool even = false;       // atom at u <=> equal-weight atom at -u
  bool valid_atoms = true; // unit normals, positive finite weights, distinct directions
  /// Smallest over largest eigenvalue of sum w u u^T; tiny values mean the
  /// support only barely spans and the Minkowski solver may struggle.
  double conditioning = 0.0;
  bool ill_conditioned = false;

  /// The Minkowski problem has a solution for this measure.
  bool feasible() const { return valid_atoms && closed && rank == dim; }
};

MeasureDiagnostics validate_measure(const SurfaceMeasure& s);

}  // namespace asymlab
