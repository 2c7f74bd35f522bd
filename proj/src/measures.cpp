#include "asymlab/measures.hpp"

#include "asymlab/error.hpp"

#include <cmath>

namespace asymlab {

double mixed_volume_v1(const Polytope& l, const Polytope& k) {
  if (l.dim() != k.dim()) throw Error(ErrorKind::DimensionMismatch, "mixed_volume_v1");
  double sum = 0.0;
  for (const auto& f : l.facets()) sum += support(k, f.plane.normal) * f.area;
  return sum / l.dim();
}

double minkowski_inequality_gap(const Polytope& l, const Polytope& k) {
  const int n = l.dim();
  const double v1 = mixed_volume_v1(l, k);
  return v1 - std::pow(k.volume(), 1.0 / n) * std::pow(l.volume(), (n - 1.0) / n);
}

SurfaceMeasure merge_atoms(int dim, std::span<const Atom> atoms) {
  SurfaceMeasure out;
  out.dim = dim;
  for (const auto& a : atoms) {
    if (a.normal.size() != dim) throw Error(ErrorKind::DimensionMismatch, "merge_atoms");
    bool merged = false;
    for (auto& b : out.atoms) {
      if ((b.normal - a.normal).norm() < kAngleMerge) {
        b.weight += a.weight;
        merged = true;
        break;
      }
    }
    if (!merged) out.atoms.push_back(a);
  }
  return out;
}

SurfaceMeasure blaschke_measure(const Polytope& k) {
  std::vector<Atom> atoms;
  for (const auto& f : k.facets()) {
    atoms.push_back({f.plane.normal, 0.5 * f.area});
    atoms.push_back({-f.plane.normal, 0.5 * f.area});
  }
  return merge_atoms(k.dim(), atoms);
}

MeasureDiagnostics validate_measure(const SurfaceMeasure& s) {
  MeasureDiagnostics d;
  d.dim = s.dim;
  Vec centroid = Vec::Zero(s.dim);
  Eigen::MatrixXd second = Eigen::MatrixXd::Zero(s.dim, s.dim);
  for (std::size_t i = 0; i < s.atoms.size(); ++i) {
    const auto& a = s.atoms[i];
    if (a.normal.size() != s.dim || std::abs(a.normal.norm() - 1.0) > 1e-12 ||
        !(a.weight > 0.0) || !std::isfinite(a.weight)) {
      d.valid_atoms = false;
      continue;
    }
    for (std::size_t j = 0; j < i; ++j)
      if ((s.atoms[j].normal - a.normal).norm() <= kAngleMerge) d.valid_atoms = false;
    d.total_mass += a.weight;
    centroid += a.weight * a.normal;
    second += a.weight * (a.normal * a.normal.transpose());
  }
  d.centroid_norm = centroid.norm();
  d.closed = d.total_mass > 0.0 && d.centroid_norm <= 1e-8 * d.total_mass;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(second);
  const auto& ev = eig.eigenvalues();
  const double top = ev.size() ? ev[ev.size() - 1] : 0.0;
  d.rank = 0;
  for (int i = 0; i < ev.size(); ++i)
    if (ev[i] > 1e-12 * top) ++d.rank;
  d.conditioning = top > 0.0 ? ev[0] / top : 0.0;
  d.ill_conditioned = d.rank == s.dim && d.conditioning < 1e-6;

  d.even = true;
  for (const auto& a : s.atoms) {
    bool matched = false;
    for (const auto& b : s.atoms) {
      if ((a.normal + b.normal).norm() < kAngleMerge &&
          std::abs(a.weight - b.weight) <= 1e-12 * std::max(a.weight, b.weight)) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      d.even = false;
      break;
    }
  }
  return d;
}

}  // namespace asymlab
