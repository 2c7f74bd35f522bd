#pragma once

#include "asymlab/polytope.hpp"
#include "oracles/planar.hpp"

#include <initializer_list>
#include <vector>

namespace testutil {

inline asymlab::Vec vec(std::initializer_list<double> xs) {
  asymlab::Vec v(static_cast<int>(xs.size()));
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline asymlab::Polytope poly(std::initializer_list<std::initializer_list<double>> pts) {
  asymlab::PointList list;
  for (auto p : pts) list.push_back(vec(p));
  return asymlab::convex_hull(list);
}

inline asymlab::Polytope triangle() { return poly({{0, 0}, {1, 0}, {0, 1}}); }

inline std::vector<oracle::P2> to_p2(const asymlab::Polytope& p) {
  std::vector<oracle::P2> out;
  for (const auto& v : p.vertices()) out.push_back({v[0], v[1]});
  return oracle::monotone_hull(out);
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace testutil
