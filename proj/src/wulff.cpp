#include "asymlab/wulff.hpp"

#include "asymlab/error.hpp"
#include "polytope_internal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace asymlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Halfspace> planes(const PointList& dirs, std::span<const double> heights) {
  std::vector<Halfspace> hs;
  hs.reserve(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) hs.push_back({dirs[i], heights[i]});
  return hs;
}

// Index of the entry of `dirs` matching u, or -1.
int find_direction(const PointList& dirs, const Vec& u) {
  for (std::size_t i = 0; i < dirs.size(); ++i)
    if ((dirs[i] - u).norm() <= kAngleMerge) return static_cast<int>(i);
  return -1;
}

struct WulffState {
  double volume = 0.0;
  std::vector<double> areas;  // per direction, zero for absent facets
};

// Normals are unit and positively span; nullopt when W(h) has no interior.
std::optional<WulffState> evaluate(const PointList& dirs, std::span<const double> heights,
                                   detail::DualCache* cache = nullptr) {
  WulffState st;
  st.volume = detail::halfspace_volume_areas(planes(dirs, heights), st.areas, cache);
  if (!(st.volume > 0.0)) return std::nullopt;
  return st;
}

double functional(std::span<const double> weights, std::span<const double> h, double volume) {
  if (!(volume > 0.0)) return kInf;
  double s = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) s += weights[i] * h[i];
  return s - std::log(volume);
}

void check_directions(int dim, const PointList& dirs) {
  for (const auto& u : dirs) {
    if (u.size() != dim) throw Error(ErrorKind::DimensionMismatch, "direction dimension");
    if (std::abs(u.norm() - 1.0) > 1e-12) throw Error(ErrorKind::InvalidArgument, "directions must be unit");
  }
}

// f at u: its weight when u is one of f's directions, zero otherwise.
double bump_at(const SupportVector& f, const Vec& u) {
  const int i = find_direction(f.directions, u);
  return i < 0 ? 0.0 : f.heights[i];
}

}  // namespace

Polytope wulff_shape(const SupportVector& s) {
  if (s.directions.size() != s.heights.size())
    throw Error(ErrorKind::InvalidArgument, "directions and heights differ in length");
  if (s.directions.empty()) throw Error(ErrorKind::Unbounded, "no directions");
  check_directions(static_cast<int>(s.directions[0].size()), s.directions);
  for (double h : s.heights)
    if (!std::isfinite(h)) throw Error(ErrorKind::InvalidArgument, "non-finite height");
  return intersect_halfspaces(planes(s.directions, s.heights));
}

double minkowski_functional(const SurfaceMeasure& s, std::span<const double> heights) {
  if (heights.size() != s.atoms.size()) throw Error(ErrorKind::InvalidArgument, "one height per atom");
  PointList dirs;
  std::vector<double> w;
  for (const auto& a : s.atoms) {
    dirs.push_back(a.normal);
    w.push_back(a.weight);
  }
  const auto st = evaluate(dirs, heights);
  return functional(w, heights, st ? st->volume : 0.0);
}

Polytope solve_minkowski(const SurfaceMeasure& s, const MinkowskiOptions& opts, MinkowskiStats* stats) {
  const MeasureDiagnostics diag = validate_measure(s);
  if (stats) stats->diagnostics = diag;
  if (!diag.feasible()) throw Error(ErrorKind::InfeasibleMeasure, "measure is not closed, not full rank, or has bad atoms");
  const int m = static_cast<int>(s.atoms.size());
  const int dim = s.dim;

  PointList dirs;
  std::vector<double> w;
  for (const auto& a : s.atoms) {
    dirs.push_back(a.normal);
    w.push_back(a.weight);
  }
  const double wmax = *std::max_element(w.begin(), w.end());

  std::vector<double> h = opts.initial_heights;
  if (h.empty()) h.assign(m, 1.0);
  if (static_cast<int>(h.size()) != m) throw Error(ErrorKind::InvalidArgument, "one initial height per atom");

  detail::DualCache cache;
  auto st = evaluate(dirs, h, &cache);
  if (!st) throw Error(ErrorKind::InvalidArgument, "initial heights give an empty body");
  double phi = functional(w, h, st->volume);

  auto gradient_of = [&](const WulffState& state) {
    std::vector<double> g(m);
    for (int i = 0; i < m; ++i) g[i] = w[i] - state.areas[i] / state.volume;
    return g;
  };
  auto sup_norm = [](const std::vector<double>& v) {
    double r = 0.0;
    for (double x : v) r = std::max(r, std::abs(x));
    return r;
  };

  std::vector<double> g = gradient_of(*st);
  double mean_h = 0.0;
  for (double x : h) mean_h += std::abs(x);
  mean_h /= m;
  double alpha = 0.1 * mean_h / std::max(sup_norm(g), 1e-300);
  int iter = 0;
  bool converged = false;
  std::vector<double> trial(m);
  for (; iter < opts.max_iterations; ++iter) {
    if (sup_norm(g) < opts.gradient_tol * wmax) {
      converged = true;
      break;
    }
    double gg = 0.0;
    for (double x : g) gg += x * x;

    // Backtracking; once the promised decrease is lost in the rounding of phi,
    // a step that does not increase phi beyond that rounding is accepted.
    const double noise = 1e-14 * (std::abs(phi) + 1.0);
    std::optional<WulffState> next;
    double next_phi = kInf;
    bool accepted = false;
    for (int tries = 0; tries < 60; ++tries) {
      for (int i = 0; i < m; ++i) trial[i] = h[i] - alpha * g[i];
      next = evaluate(dirs, trial, &cache);
      next_phi = next ? functional(w, trial, next->volume) : kInf;
      const double promised = 1e-4 * alpha * gg;
      if (next_phi <= phi - promised || (promised < noise && next_phi <= phi + noise)) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;

    std::vector<double> g_next = gradient_of(*next);
    // Barzilai-Borwein guess for the next trial step.
    double ss = 0.0, sy = 0.0;
    for (int i = 0; i < m; ++i) {
      const double si = trial[i] - h[i];
      ss += si * si;
      sy += si * (g_next[i] - g[i]);
    }
    alpha = sy > 0.0 ? ss / sy : 2.0 * alpha;
    h = trial;
    g.swap(g_next);
    st = std::move(next);
    phi = next_phi;
  }
  if (stats) {
    stats->iterations = iter;
    stats->gradient_norm = sup_norm(g) / wmax;
  }
  if (!converged)
    throw Error(ErrorKind::ConvergenceFailure,
                "gradient sup norm " + std::to_string(sup_norm(g) / wmax) + " after " +
                    std::to_string(iter) + " iterations");

  // Areas over volume equal the weights at the minimiser; scaling by s
  // multiplies areas by s^{n-1}.
  const double factor = std::pow(st->volume, -1.0 / (dim - 1));
  for (double& x : h) x *= factor;
  Polytope body = intersect_halfspaces(planes(dirs, h));
  body = translate(body, -body.centroid());

  std::vector<double> areas(m, 0.0);
  for (const auto& f : body.facets()) {
    const int i = find_direction(dirs, f.plane.normal);
    if (i >= 0) areas[i] += f.area;
  }
  double worst = 0.0;
  for (int i = 0; i < m; ++i) worst = std::max(worst, std::abs(areas[i] - w[i]) / w[i]);
  if (stats) stats->max_rel_residual = worst;
  if (static_cast<int>(body.facets().size()) != m)
    throw Error(ErrorKind::ConvergenceFailure, "solution is missing facets");
  return body;
}

Polytope blaschke_body(const Polytope& k) { return solve_minkowski(blaschke_measure(k)); }

Polytope wulff_deform(const Polytope& k, const SupportVector& f, double t, bool require_even) {
  if (f.directions.size() != f.heights.size())
    throw Error(ErrorKind::InvalidArgument, "directions and weights differ in length");
  check_directions(k.dim(), f.directions);
  for (double x : f.heights)
    if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "bump weights must be nonnegative");
  if (!(t >= 0.0)) throw Error(ErrorKind::InvalidArgument, "t must be nonnegative");
  if (require_even) {
    for (std::size_t i = 0; i < f.directions.size(); ++i) {
      const double opposite = bump_at(f, -f.directions[i]);
      if (std::abs(opposite - f.heights[i]) > 1e-12 * std::max(opposite, f.heights[i]))
        throw Error(ErrorKind::InvalidArgument, "bump is not even");
    }
  }
  PointList dirs;
  for (const auto& fa : k.facets()) dirs.push_back(fa.plane.normal);
  for (const auto& u : f.directions)
    if (find_direction(dirs, u) < 0) dirs.push_back(u);
  std::vector<double> heights;
  for (const auto& u : dirs) heights.push_back(support(k, u) + t * bump_at(f, u));
  return intersect_halfspaces(planes(dirs, heights));
}

DerivativeReport wulff_derivative_check(const Polytope& k, const SupportVector& f) {
  DerivativeReport r;
  double fmax = 0.0;
  for (double x : f.heights) fmax = std::max(fmax, x);
  double scale = 0.0;
  for (const auto& fa : k.facets()) {
    r.predicted += bump_at(f, fa.plane.normal) * fa.area;
    scale += fmax * fa.area;
  }

  const double base = k.volume();
  constexpr int kLevels = 5;
  double t = 1e-2;
  // Richardson table for a quotient with an expansion in powers of t.
  std::vector<std::vector<double>> table(kLevels);
  for (int i = 0; i < kLevels; ++i, t *= 0.1) {
    r.steps.push_back(t);
    r.quotients.push_back((wulff_deform(k, f, t).volume() - base) / t);
    table[i].push_back(r.quotients.back());
    double p = 10.0;
    for (int j = 1; j <= i; ++j, p *= 10.0)
      table[i].push_back((p * table[i][j - 1] - table[i - 1][j - 1]) / (p - 1.0));
  }
  // Entry whose last refinement changed it least.
  double best_change = kInf;
  r.extrapolated = r.quotients.back();
  for (int i = 1; i < kLevels; ++i) {
    for (int j = 1; j <= i; ++j) {
      const double change = std::abs(table[i][j] - table[i - 1][j - 1]);
      if (change < best_change) {
        best_change = change;
        r.extrapolated = table[i][j];
      }
    }
  }
  const double denom = std::abs(r.predicted) > 0.0 ? std::abs(r.predicted) : scale;
  r.rel_error = denom > 0.0 ? std::abs(r.extrapolated - r.predicted) / denom
                            : std::abs(r.extrapolated - r.predicted);
  return r;
}

}  // namespace asymlab
