#pragma once

#include "asymlab/polytope.hpp"

namespace asymlab {

struct KernelResult {
  double q_value = 0.0;  // max_x |(K + x) ∩ -K|
  Vec center;            // maximiser of the overlap volume
  Polytope kernel;       // (K + center) ∩ -K
  double m_value = 0.0;  // q_value / |K|

  /// The kernel moved by -center/2, which makes it origin-symmetric.
  Polytope recentred_kernel() const;
};

/// |(K + x) ∩ -K|, zero when the two bodies do not overlap in volume.
double overlap_volume(const Polytope& k, const Vec& x);

struct PseudoCenterOptions {
  double xtol = 1e-8;      // final simplex diameter, relative to diam(K)
  double agreement = 1e-7; // allowed relative spread of restart values
  int max_evals = 4000;    // per Nelder-Mead run
};

/// The unique x maximising |(K + x) ∩ -K|; minus twice the centre of the kernel of -K.
///
/// Maximises g(x)^{1/n}, which is concave on its support, by Nelder-Mead
/// from -2 centroid(K) and again from the 2n seeds displaced by
/// ±diam(K)/20 along each axis. The best run wins, ties broken by the
/// lexicographically smallest point. Throws ConvergenceFailure when the runs
/// disagree in value by more than `agreement`.
Vec pseudo_center(const Polytope& k, const PseudoCenterOptions& opts = {});

KernelResult symmetric_kernel(const Polytope& k, const PseudoCenterOptions& opts = {});

/// m(K) = q(K) / |K|, in (2^{-n}, 1].
double asymmetry_m(const Polytope& k, const PseudoCenterOptions& opts = {});

/// K moved by half its pseudo-center, so that K ∩ -K is the symmetric kernel.
Polytope recentre_at_pseudo_center(const Polytope& k, const PseudoCenterOptions& opts = {});

}  // namespace asymlab
