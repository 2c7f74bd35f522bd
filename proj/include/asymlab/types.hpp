#pragma once

#include <Eigen/Dense>

#include <vector>

namespace asymlab {

inline constexpr int kMaxDim = 6;

/// Geometric tolerance, always multiplied by an object's diameter.
inline constexpr double kGeomEps = 1e-9;

/// Normals closer than this (chord length ~ angle in radians) are one direction.
inline constexpr double kAngleMerge = 1e-8;

// Dynamic size with a fixed upper bound keeps every point on the stack.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;

using PointList = std::vector<Vec>;

/// The closed halfspace {x : <normal, x> <= offset}.
struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

inline Vec unit_vector(int dim, int axis) {
  Vec v = Vec::Zero(dim);
  v[axis] = 1.0;
  return v;
}

}  // namespace asymlab
