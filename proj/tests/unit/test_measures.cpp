#include "asymlab/bodies.hpp"
#include "asymlab/measures.hpp"
#include "asymlab/sampling.hpp"
#include "doctest.h"
#include "test_util.hpp"

#include <cmath>

using namespace asymlab;
using testutil::vec;

namespace {

Polytope random_body(int dim, Rng& rng) {
  std::uniform_int_distribution<int> count(dim + 1, dim + 8);
  return random_polytope(dim, count(rng), rng);
}

bool same_atoms(const SurfaceMeasure& a, const SurfaceMeasure& b, double tol) {
  if (a.atoms.size() != b.atoms.size()) return false;
  for (const auto& x : a.atoms) {
    bool hit = false;
    for (const auto& y : b.atoms)
      if ((x.normal - y.normal).norm() < kAngleMerge && std::abs(x.weight - y.weight) <= tol) hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("mixed_volume_v1") {
  Rng rng(1);
  for (int dim = 2; dim <= 4; ++dim) {
    const Polytope k = random_body(dim, rng);
    CHECK(testutil::rel_err(mixed_volume_v1(k, k), k.volume()) < 1e-10);
  }

  const Polytope l = cube(2, 0, 1), k = cube(2, 0, 2);
  CHECK(mixed_volume_v1(l, k) == doctest::Approx(2.0));
  // d|tK + L|/dt at 0+ by forward differences on actual Minkowski sums
  const double t = 1e-6;
  const double deriv = (minkowski_sum(scale(k, t), l).volume() - l.volume()) / t;
  CHECK(deriv == doctest::Approx(2 * mixed_volume_v1(l, k)).epsilon(1e-5));
}

TEST_CASE("mixed_volume_v1 is monotone in its second argument") {
  Rng rng(7);
  std::normal_distribution<double> g(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + trial % 3;
    const Polytope l = random_body(dim, rng);
    const Polytope k = random_body(dim, rng);
    PointList more = k.vertices();
    for (int i = 0; i < 3; ++i) {
      Vec p(dim);
      for (int d = 0; d < dim; ++d) p[d] = 1.5 * g(rng);
      more.push_back(p);
    }
    const Polytope bigger = convex_hull(more);
    CHECK(mixed_volume_v1(l, k) <= mixed_volume_v1(l, bigger) + 1e-12);
  }
}

TEST_CASE("minkowski inequality") {
  Rng rng(3);
  const Polytope k = random_body(3, rng);
  CHECK(std::abs(minkowski_inequality_gap(k, k)) < 1e-12 * k.volume());
  CHECK(std::abs(minkowski_inequality_gap(k, translate(k, vec({1, 2, 3})))) < 1e-10);
  CHECK(std::abs(minkowski_inequality_gap(scale(k, 2.5), k)) < 1e-10 * k.volume());

  for (int dim = 2; dim <= 4; ++dim) {
    for (int trial = 0; trial < 500; ++trial) {
      const Polytope l = random_body(dim, rng), kk = random_body(dim, rng);
      const double gap = minkowski_inequality_gap(l, kk);
      CHECK(gap >= -1e-9 * l.volume());
      if (trial < 20) CHECK(gap > 0.0);  // random pairs are never homothetic
    }
  }
}

TEST_CASE("blaschke_measure") {
  SUBCASE("symmetric body keeps its measure") {
    const Polytope c = cube(3);
    CHECK(same_atoms(blaschke_measure(c), surface_area_measure(c), 1e-14));
  }
  SUBCASE("triangle") {
    const auto m = blaschke_measure(testutil::triangle());
    REQUIRE(m.atoms.size() == 6);
    for (const auto& a : m.atoms) {
      const bool diagonal = std::abs(std::abs(a.normal[0]) - std::sqrt(0.5)) < 1e-12;
      CHECK(a.weight == doctest::Approx(diagonal ? std::sqrt(2.0) / 2 : 0.5));
    }
  }
  SUBCASE("mass, evenness and -K invariance") {
    Rng rng(5);
    for (int dim = 2; dim <= 5; ++dim) {
      for (int trial = 0; trial < 20; ++trial) {
        const Polytope k = random_body(dim, rng);
        const auto m = blaschke_measure(k);
        CHECK(testutil::rel_err(m.total_mass(), surface_area_measure(k).total_mass()) < 1e-14);
        const auto d = validate_measure(m);
        CHECK(d.even);
        CHECK(d.feasible());
        CHECK(same_atoms(m, blaschke_measure(negate(k)), 1e-14));
      }
    }
  }
}

TEST_CASE("validate_measure") {
  const auto sq = validate_measure(surface_area_measure(cube(2)));
  CHECK(sq.centroid_norm < 1e-14);
  CHECK(sq.rank == 2);
  CHECK(sq.even);
  CHECK(sq.feasible());

  SurfaceMeasure lone{2, {{vec({1, 0}), 1.0}}};
  const auto d = validate_measure(lone);
  CHECK(d.rank == 1);
  CHECK(d.centroid_norm > 0.5);
  CHECK(!d.feasible());

  const auto tri = validate_measure(surface_area_measure(testutil::triangle()));
  CHECK(tri.centroid_norm < 1e-14);
  CHECK(tri.rank == 2);
  CHECK(!tri.even);
  CHECK(tri.feasible());

  SurfaceMeasure thin{2, {{vec({1, 0}), 1.0}, {vec({-1, 0}), 1.0}, {vec({0, 1}), 1e-9}, {vec({0, -1}), 1e-9}}};
  const auto t = validate_measure(thin);
  CHECK(t.feasible());
  CHECK(t.ill_conditioned);
}
