#pragma once

#include "asymlab/types.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace asymlab::detail {

struct SimplexResult {
  Vec point;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead minimisation with the standard coefficients. Stops once every
/// vertex lies within `xtol` of the best one, or after `max_evals` calls.
inline SimplexResult nelder_mead(const std::function<double(const Vec&)>& f, const Vec& start,
                                 double step, double xtol, int max_evals) {
  const int n = static_cast<int>(start.size());
  std::vector<Vec> x(n + 1, start);
  std::vector<double> fx(n + 1);
  for (int i = 0; i < n; ++i) x[i + 1][i] += step;
  int evals = 0;
  for (int i = 0; i <= n; ++i) {
    fx[i] = f(x[i]);
    ++evals;
  }
  std::vector<int> order(n + 1);
  bool converged = false;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    {
      std::vector<Vec> xs;
      std::vector<double> fs;
      for (int i : order) {
        xs.push_back(x[i]);
        fs.push_back(fx[i]);
      }
      x.swap(xs);
      fx.swap(fs);
    }
    double spread = 0.0;
    for (int i = 1; i <= n; ++i) spread = std::max(spread, (x[i] - x[0]).norm());
    if (spread < xtol) {
      converged = true;
      break;
    }
    if (evals >= max_evals) break;

    Vec centroid = Vec::Zero(n);
    for (int i = 0; i < n; ++i) centroid += x[i];
    centroid /= n;
    const Vec xr = centroid + (centroid - x[n]);
    const double fr = f(xr);
    ++evals;
    if (fr < fx[0]) {
      const Vec xe = centroid + 2.0 * (centroid - x[n]);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        x[n] = xe;
        fx[n] = fe;
      } else {
        x[n] = xr;
        fx[n] = fr;
      }
      continue;
    }
    if (fr < fx[n - 1]) {
      x[n] = xr;
      fx[n] = fr;
      continue;
    }
    const bool outside = fr < fx[n];
    const Vec xc = outside ? Vec(centroid + 0.5 * (xr - centroid)) : Vec(centroid + 0.5 * (x[n] - centroid));
    const double fc = f(xc);
    ++evals;
    if (fc < (outside ? fr : fx[n])) {
      x[n] = xc;
      fx[n] = fc;
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      x[i] = x[0] + 0.5 * (x[i] - x[0]);
      fx[i] = f(x[i]);
      ++evals;
    }
  }
  return {x[0], fx[0], evals, converged};
}

}  // namespace asymlab::detail
