#include "asymlab/search.hpp"

#include "asymlab/error.hpp"
#include "asymlab/kernel.hpp"
#include "asymlab/sampling.hpp"
#include "asymlab/wulff.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace asymlab {

Objective parse_objective(const std::string& name) {
  if (name == "min-m") return Objective::MinM;
  if (name == "max-blaschke-ratio") return Objective::MaxBlaschkeRatio;
  throw Error(ErrorKind::InvalidArgument, "unknown objective '" + name + "'");
}

std::string to_string(Objective o) { return o == Objective::MinM ? "min-m" : "max-blaschke-ratio"; }

Polytope affine_normalize(const Polytope& k) {
  const Vec c = k.centroid();
  const Mat cov = k.covariance();
  Eigen::LLT<Mat> llt(cov);
  if (llt.info() != Eigen::Success) throw Error(ErrorKind::DegenerateInput, "covariance not positive definite");
  const Mat a = llt.matrixL().solve(Mat::Identity(k.dim(), k.dim()));
  return affine_map(k, a, -a * c);
}

double distance_to_triangle(const Polytope& k) {
  if (k.dim() != 2) throw Error(ErrorKind::UnsupportedDim, "distance_to_triangle is planar");
  const Polytope body = affine_normalize(k);
  PointList tri;
  for (int i = 0; i < 3; ++i) {
    Vec v(2);
    v << std::cos(2 * std::numbers::pi * i / 3), std::sin(2 * std::numbers::pi * i / 3);
    tri.push_back(v);
  }
  const Polytope ref = affine_normalize(convex_hull(tri));
  auto at = [&](double angle, bool flip) {
    Mat rot(2, 2);
    rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    if (flip) rot.col(1) *= -1.0;
    return hausdorff_distance(body, affine_map(ref, rot, Vec::Zero(2)));
  };
  // the triangle has 3-fold symmetry; scan, then refine around the best angle
  double best = INFINITY;
  for (bool flip : {false, true}) {
    double arg = 0.0, val = INFINITY;
    constexpr int kSteps = 240;
    const double span = 2 * std::numbers::pi / 3;
    for (int i = 0; i < kSteps; ++i) {
      const double a = span * i / kSteps;
      const double v = at(a, flip);
      if (v < val) {
        val = v;
        arg = a;
      }
    }
    double lo = arg - span / kSteps, hi = arg + span / kSteps;
    for (int it = 0; it < 60; ++it) {
      const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      if (at(m1, flip) < at(m2, flip))
        hi = m2;
      else
        lo = m1;
    }
    best = std::min({best, val, at(0.5 * (lo + hi), flip)});
  }
  return best;
}

namespace {

constexpr int kMaxVertices = 12;

// Minimised form of the objective; nullopt-like NaN when it cannot be evaluated.
double evaluate(const Polytope& k, Objective o) {
  try {
    if (o == Objective::MinM) return asymmetry_m(k);
    return -blaschke_body(k).volume() / k.volume();
  } catch (const Error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

SearchResult search_extremal(const SearchOptions& opts) {
  if (opts.dim != 2 && opts.dim != 3) throw Error(ErrorKind::UnsupportedDim, "search runs in dimension 2 or 3");
  if (opts.budget < 1 || opts.budget > 100000) throw Error(ErrorKind::InvalidArgument, "budget must be in 1..100000");
  const int start = opts.start_vertices > 0 ? opts.start_vertices : opts.dim + 4;
  if (start < opts.dim + 1 || start > kMaxVertices) throw Error(ErrorKind::InvalidArgument, "start_vertices out of range");

  Rng rng(opts.seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit;

  Polytope current = affine_normalize(random_polytope(opts.dim, start, rng));
  double f_cur = evaluate(current, opts.objective);
  SearchResult res{current, f_cur, {}, 1, 0, false};
  double f_best = f_cur;

  const double t_hot = 0.02, t_cold = 1e-6, step0 = 0.5;
  const int every = std::max(1, opts.budget / 500);
  int since_accept = 0;
  while (res.evaluations < opts.budget) {
    const double frac = static_cast<double>(res.evaluations) / opts.budget;
    const double temp = t_hot * std::pow(t_cold / t_hot, frac);
    const double sigma = step0 * std::sqrt(temp / t_hot);

    PointList pts = current.vertices();
    const int j = static_cast<int>(unit(rng) * pts.size()) % static_cast<int>(pts.size());
    for (int d = 0; d < opts.dim; ++d) pts[j][d] += sigma * gauss(rng);
    double f_new = std::numeric_limits<double>::quiet_NaN();
    std::optional<Polytope> cand;
    try {
      cand = convex_hull(pts);
      if (static_cast<int>(cand->vertices().size()) > kMaxVertices) cand.reset();
    } catch (const Error&) {
      cand.reset();
    }
    if (cand) f_new = evaluate(*cand, opts.objective);
    ++res.evaluations;

    const double u = unit(rng);
    if (std::isfinite(f_new) && (f_new <= f_cur || u < std::exp(-(f_new - f_cur) / temp))) {
      try {
        current = affine_normalize(*cand);
        f_cur = f_new;
        ++res.accepted;
        since_accept = 0;
        if (f_cur < f_best) {
          f_best = f_cur;
          res.best = current;
        }
      } catch (const Error&) {
      }
    } else {
      ++since_accept;
    }
    if (res.evaluations % every == 0 || res.evaluations == opts.budget)
      res.trace.push_back({res.evaluations, temp, f_cur, f_best});
    // frozen: cold and nothing accepted for a long stretch
    if (temp < 1e-5 && since_accept >= 2000) break;
  }
  res.budget_exhausted = res.evaluations >= opts.budget;
  res.best_value = opts.objective == Objective::MinM ? f_best : -f_best;
  return res;
}

}  // namespace asymlab
