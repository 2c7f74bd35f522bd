#include "asymlab/kernel.hpp"

#include "asymlab/error.hpp"
#include "nelder_mead.hpp"
#include "polytope_internal.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace asymlab {

namespace {

// Evaluates x -> |(K + x) ∩ -K| with per-body setup done once.
class OverlapEvaluator {
 public:
  explicit OverlapEvaluator(const Polytope& k) : dim_(k.dim()) {
    base_ = detail::normalized(k.halfspaces());
    if (dim_ == 2) {
      // counter-clockwise vertex order around the interior point
      polygon_ = k.vertices();
      const Vec c = k.interior_point();
      std::sort(polygon_.begin(), polygon_.end(), [&](const Vec& a, const Vec& b) {
        return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
      });
    }
    hs_.resize(2 * base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) hs_[base_.size() + i] = {-base_[i].normal, base_[i].offset};
  }

  // Smallest constraint slack at x/2; the overlap has interior iff this is > 0.
  double slack(const Vec& x) const {
    double s = 1e300;
    for (const auto& h : base_) s = std::min(s, h.offset + 0.5 * h.normal.dot(x));
    return s;
  }

  double operator()(const Vec& x) const {
    if (dim_ == 2) return clip_area(x);
    for (std::size_t i = 0; i < base_.size(); ++i)
      hs_[i] = {base_[i].normal, base_[i].offset + base_[i].normal.dot(x)};
    // (K + x) ∩ -K is symmetric about x/2, which is interior whenever the
    // overlap has volume
    return detail::halfspace_volume_about(hs_, 0.5 * x, {true, &cache_});
  }

 private:
  // Sutherland-Hodgman: clip K + x against each edge halfplane of -K.
  double clip_area(const Vec& x) const {
    std::vector<std::array<double, 2>> cur, next;
    cur.reserve(2 * polygon_.size());
    for (const auto& v : polygon_) cur.push_back({v[0] + x[0], v[1] + x[1]});
    for (std::size_t i = 0; i < base_.size() && !cur.empty(); ++i) {
      const double nx = -base_[i].normal[0], ny = -base_[i].normal[1], off = base_[i].offset;
      next.clear();
      for (std::size_t j = 0; j < cur.size(); ++j) {
        const auto& p = cur[j];
        const auto& q = cur[(j + 1) % cur.size()];
        const double dp = nx * p[0] + ny * p[1] - off;
        const double dq = nx * q[0] + ny * q[1] - off;
        if (dp <= 0) next.push_back(p);
        if ((dp < 0 && dq > 0) || (dp > 0 && dq < 0)) {
          const double t = dp / (dp - dq);
          next.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
        }
      }
      cur.swap(next);
    }
    double a = 0.0;
    for (std::size_t j = 0; j < cur.size(); ++j) {
      const auto& p = cur[j];
      const auto& q = cur[(j + 1) % cur.size()];
      a += p[0] * q[1] - p[1] * q[0];
    }
    return std::max(0.0, 0.5 * a);
  }

  int dim_;
  std::vector<Halfspace> base_;
  mutable std::vector<Halfspace> hs_;
  mutable detail::DualCache cache_;
  PointList polygon_;
};

bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace

double overlap_volume(const Polytope& k, const Vec& x) {
  if (x.size() != k.dim()) throw Error(ErrorKind::DimensionMismatch, "overlap_volume");
  return OverlapEvaluator(k)(x);
}

Vec pseudo_center(const Polytope& k, const PseudoCenterOptions& opts) {
  const int n = k.dim();
  const OverlapEvaluator g(k);
  const double diam = k.diameter();
  // outside the support the violation at x/2 leads the simplex back in
  auto objective = [&](const Vec& x) {
    const double s = g.slack(x);
    if (!(s > 0.0)) return -s;
    return -std::pow(g(x), 1.0 / n);
  };

  const Vec start = -2.0 * k.centroid();
  std::vector<Vec> seeds{start};
  for (int i = 0; i < n; ++i) {
    seeds.push_back(start + 0.05 * diam * unit_vector(n, i));
    seeds.push_back(start - 0.05 * diam * unit_vector(n, i));
  }

  std::vector<detail::SimplexResult> runs;
  for (const auto& s : seeds)
    runs.push_back(detail::nelder_mead(objective, s, 0.1 * diam, opts.xtol * diam, opts.max_evals));

  double hi = -1e300, lo = 1e300;
  for (const auto& r : runs) {
    hi = std::max(hi, -r.value);
    lo = std::min(lo, -r.value);
  }
  if (!(hi > 0.0))
    throw Error(ErrorKind::ConvergenceFailure, "overlap volume vanished at every restart");
  // compare volumes, not n-th roots
  const double spread = (std::pow(hi, n) - std::pow(lo, n)) / std::pow(hi, n);
  if (spread > opts.agreement)
    throw Error(ErrorKind::ConvergenceFailure,
                "restarts disagree by " + std::to_string(spread) + " relative");

  const detail::SimplexResult* best = &runs[0];
  for (const auto& r : runs) {
    if (r.value < best->value || (r.value == best->value && lex_less(r.point, best->point)))
      best = &r;
  }
  return best->point;
}

Polytope KernelResult::recentred_kernel() const { return translate(kernel, -0.5 * center); }

KernelResult symmetric_kernel(const Polytope& k, const PseudoCenterOptions& opts) {
  const Vec x0 = pseudo_center(k, opts);
  auto body = intersect(translate(k, x0), negate(k));
  if (!body) throw Error(ErrorKind::ConvergenceFailure, "kernel intersection is empty");
  const double q = body->volume();
  return KernelResult{q, x0, std::move(*body), q / k.volume()};
}

double asymmetry_m(const Polytope& k, const PseudoCenterOptions& opts) {
  const Vec x0 = pseudo_center(k, opts);
  return overlap_volume(k, x0) / k.volume();
}

Polytope recentre_at_pseudo_center(const Polytope& k, const PseudoCenterOptions& opts) {
  return translate(k, 0.5 * pseudo_center(k, opts));
}

}  // namespace asymlab
