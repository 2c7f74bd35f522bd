#pragma once

#include "asymlab/polytope.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace asymlab {

enum class Objective { MinM, MaxBlaschkeRatio };

/// "min-m" or "max-blaschke-ratio"; InvalidArgument otherwise.
Objective parse_objective(const std::string& name);
std::string to_string(Objective o);

struct SearchOptions {
  int dim = 2;
  Objective objective = Objective::MinM;
  int budget = 20000;  // objective evaluations
  std::uint64_t seed = 0;
  int start_vertices = 0;  // 0: dim + 4
};

struct TracePoint {
  int evaluation;
  double temperature;
  double current;  // both in the minimised form: m, or minus the Blaschke ratio
  double best;
};

struct SearchResult {
  Polytope best;
  double best_value = 0.0;  // m, or the Blaschke ratio
  std::vector<TracePoint> trace;
  int evaluations = 0;
  int accepted = 0;
  bool budget_exhausted = false;  // stopped by the budget rather than by freezing
};

/// Simulated annealing over the vertices of a polytope with at most 12
/// vertices. Each proposal moves one vertex by a Gaussian step that shrinks
/// with the temperature; accepted bodies are moved to centroid 0 and identity
/// covariance. Deterministic for a given seed.
SearchResult search_extremal(const SearchOptions& opts);

/// Centroid 0 and identity covariance.
Polytope affine_normalize(const Polytope& k);

/// Hausdorff distance, after affine normalization of both, from a polygon to
/// the nearest rotation or reflection of the normalized triangle. Planar only.
double distance_to_triangle(const Polytope& k);

}  // namespace asymlab
