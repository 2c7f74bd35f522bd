#include "lp.hpp"

#include <cmath>
#include <vector>

namespace asymlab::detail {

namespace {

constexpr double kPivotTol = 1e-11;

struct Tableau {
  Eigen::MatrixXd t;  // rows x (cols + 1); last column is the right-hand side
  std::vector<int> basis;
  int cols = 0;

  void pivot(int r, int c) {
    t.row(r) /= t(r, c);
    for (int i = 0; i < t.rows(); ++i) {
      if (i == r) continue;
      const double f = t(i, c);
      if (f != 0.0) t.row(i) -= f * t.row(r);
    }
    basis[r] = c;
  }
};

enum class Status { Optimal, Unbounded };

// Minimizes cost^T y over the current tableau; columns with allowed[j]==0 never enter.
Status run_simplex(Tableau& tab, const Eigen::VectorXd& cost, const std::vector<char>& allowed) {
  const int rows = static_cast<int>(tab.t.rows());
  for (int iter = 0; iter < 50000; ++iter) {
    int enter = -1;
    for (int j = 0; j < tab.cols; ++j) {
      if (!allowed[j]) continue;
      double reduced = cost[j];
      for (int r = 0; r < rows; ++r) reduced -= cost[tab.basis[r]] * tab.t(r, j);
      if (reduced < -1e-12) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return Status::Optimal;
    int leave = -1;
    double best = 0.0;
    for (int r = 0; r < rows; ++r) {
      const double a = tab.t(r, enter);
      if (a <= kPivotTol) continue;
      const double ratio = tab.t(r, tab.cols) / a;
      if (leave < 0 || ratio < best - 1e-15 ||
          (std::abs(ratio - best) <= 1e-15 && tab.basis[r] < tab.basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return Status::Unbounded;
    tab.pivot(leave, enter);
  }
  return Status::Optimal;
}

}  // namespace

std::optional<ChebyshevBall> chebyshev_center(std::span<const Halfspace> hs, int dim) {
  const int m = static_cast<int>(hs.size());
  const int rows = dim + 1;
  Tableau tab;
  tab.cols = m + rows;
  tab.t = Eigen::MatrixXd::Zero(rows, tab.cols + 1);
  for (int i = 0; i < m; ++i) {
    for (int d = 0; d < dim; ++d) tab.t(d, i) = hs[i].normal[d];
    tab.t(dim, i) = 1.0;
  }
  tab.t(dim, tab.cols) = 1.0;
  tab.basis.resize(rows);
  for (int r = 0; r < rows; ++r) {
    tab.t(r, m + r) = 1.0;
    tab.basis[r] = m + r;
  }

  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(tab.cols);
  phase1.tail(rows).setOnes();
  std::vector<char> allowed(tab.cols, 1);
  run_simplex(tab, phase1, allowed);
  double infeasibility = 0.0;
  for (int r = 0; r < rows; ++r)
    if (tab.basis[r] >= m) infeasibility += tab.t(r, tab.cols);
  if (infeasibility > 1e-10) return std::nullopt;

  // Drive zero-level artificials out of the basis where possible.
  for (int r = 0; r < rows; ++r) {
    if (tab.basis[r] < m) continue;
    for (int j = 0; j < m; ++j) {
      if (std::abs(tab.t(r, j)) > 1e-9) {
        tab.pivot(r, j);
        break;
      }
    }
  }

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(tab.cols);
  for (int i = 0; i < m; ++i) phase2[i] = hs[i].offset;
  for (int j = m; j < tab.cols; ++j) allowed[j] = 0;
  if (run_simplex(tab, phase2, allowed) == Status::Unbounded) {
    // dual unbounded below means the primal is infeasible
    ChebyshevBall ball;
    ball.center = Vec::Zero(dim);
    ball.radius = -1.0;
    return ball;
  }

  // Simplex multipliers pi = c_B^T B^{-1}; B^{-1} sits in the artificial block.
  Eigen::VectorXd pi = Eigen::VectorXd::Zero(rows);
  for (int r = 0; r < rows; ++r) {
    const double cb = phase2[tab.basis[r]];
    if (cb != 0.0) pi += cb * tab.t.block(r, m, 1, rows).transpose();
  }
  ChebyshevBall ball;
  ball.center = pi.head(dim);
  ball.radius = pi[dim];
  // Tighten against the actual constraints to absorb pivoting error.
  double slack = ball.radius;
  for (const auto& h : hs) slack = std::min(slack, h.offset - h.normal.dot(ball.center));
  ball.radius = slack;
  return ball;
}

}  // namespace asymlab::detail
