#include "asymlab/bodies.hpp"
#include "asymlab/error.hpp"
#include "asymlab/polytope.hpp"
#include "asymlab/sampling.hpp"
#include "doctest.h"
#include "test_util.hpp"

#include <cmath>
#include <numbers>

using namespace asymlab;
using testutil::poly;
using testutil::vec;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an asymlab::Error");
  return ErrorKind::InvalidArgument;
}

Polytope random_body(int dim, Rng& rng) {
  std::uniform_int_distribution<int> count(dim + 1, dim + 8);
  return random_polytope(dim, count(rng), rng);
}

}  // namespace

TEST_CASE("convex_hull drops interior points") {
  const Polytope t = poly({{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}});
  CHECK(t.vertices().size() == 3);
  CHECK(t.facets().size() == 3);
  CHECK(t.volume() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("convex_hull of cube corners has six merged facets") {
  const Polytope c = cube(3);
  CHECK(c.vertices().size() == 8);
  CHECK(c.facets().size() == 6);
  for (const auto& f : c.facets()) {
    CHECK(f.vertices.size() == 4);
    CHECK(f.area == doctest::Approx(4.0));
  }
}

TEST_CASE("convex_hull rejects lower-dimensional input") {
  CHECK(kind_of([] { poly({{0, 0}, {1, 1}, {2, 2}}); }) == ErrorKind::DegenerateInput);
  CHECK(kind_of([] { poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}); }) ==
        ErrorKind::DegenerateInput);
}

TEST_CASE("convex_hull removes points on edges and facets") {
  // edge midpoints and a face centre of the unit cube
  PointList pts;
  for (int m = 0; m < 8; ++m) pts.push_back(vec({double(m & 1), double((m >> 1) & 1), double((m >> 2) & 1)}));
  pts.insert(pts.begin(), vec({0.5, 0, 0}));
  pts.insert(pts.begin(), vec({0.5, 0.5, 1}));
  pts.insert(pts.begin(), vec({0, 0.5, 0}));
  const Polytope c = convex_hull(pts);
  CHECK(c.vertices().size() == 8);
  CHECK(c.facets().size() == 6);
  CHECK(c.volume() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("polytope representations agree") {
  Rng rng(11);
  for (int dim = 2; dim <= 5; ++dim) {
    for (int trial = 0; trial < 10; ++trial) {
      const Polytope p = random_body(dim, rng);
      for (const auto& f : p.facets()) {
        CHECK(std::abs(f.plane.normal.norm() - 1.0) < 1e-12);
        CHECK(static_cast<int>(f.vertices.size()) >= dim);
        for (int vi : f.vertices)
          CHECK(std::abs(f.plane.normal.dot(p.vertices()[vi]) - f.plane.offset) <= p.eps());
        for (const auto& v : p.vertices()) CHECK(f.plane.normal.dot(v) - f.plane.offset <= p.eps());
      }
    }
  }
}

TEST_CASE("intersect_halfspaces") {
  SUBCASE("square") {
    std::vector<Halfspace> hs{{vec({1, 0}), 1}, {vec({-1, 0}), 1}, {vec({0, 1}), 1}, {vec({0, -1}), 1}};
    const Polytope sq = intersect_halfspaces(hs);
    CHECK(sq.volume() == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(sq.vertices().size() == 4);
  }
  SUBCASE("unbounded when normals do not span") {
    std::vector<Halfspace> hs{{vec({1, 0}), 1}, {vec({0, 1}), 1}};
    CHECK(kind_of([&] { intersect_halfspaces(hs); }) == ErrorKind::Unbounded);
    std::vector<Halfspace> strip{{vec({0, 1}), 1}, {vec({0, -1}), 1}};
    CHECK(kind_of([&] { intersect_halfspaces(strip); }) == ErrorKind::Unbounded);
  }
  SUBCASE("empty when infeasible") {
    std::vector<Halfspace> hs{{vec({1, 0}), -1}, {vec({-1, 0}), -1}, {vec({0, 1}), 1}, {vec({0, -1}), 1}};
    CHECK(kind_of([&] { intersect_halfspaces(hs); }) == ErrorKind::Empty);
  }
  SUBCASE("regular hexagon recovered from its support values") {
    const Polytope hex = regular_polygon(6);
    std::vector<Halfspace> hs;
    for (int i = 0; i < 6; ++i) {
      const double t = std::numbers::pi / 6 + i * std::numbers::pi / 3;
      const Vec u = vec({std::cos(t), std::sin(t)});
      hs.push_back({u, support(hex, u)});
    }
    const Polytope back = intersect_halfspaces(hs);
    CHECK(back.vertices().size() == 6);
    CHECK(hausdorff_distance(back, hex) < 1e-10);
    CHECK(same_vertex_set(back, hex, 1e-10));
  }
  SUBCASE("redundant halfspaces are dropped") {
    std::vector<Halfspace> hs{{vec({1, 0}), 1}, {vec({-1, 0}), 1}, {vec({0, 1}), 1},
                              {vec({0, -1}), 1}, {vec({1, 1}), 5}, {vec({1, 0}), 3}};
    CHECK(intersect_halfspaces(hs).facets().size() == 4);
  }
}

TEST_CASE("halfspace round trip reproduces the body") {
  Rng rng(5);
  for (int dim = 2; dim <= 4; ++dim) {
    for (int trial = 0; trial < 10; ++trial) {
      const Polytope p = random_body(dim, rng);
      const Polytope back = intersect_halfspaces(p.halfspaces());
      CHECK(hausdorff_distance(p, back) <= 1e-8 * p.diameter());
      CHECK(back.facets().size() == p.facets().size());
    }
  }
}

TEST_CASE("volume") {
  CHECK(cube(3, 0, 1).volume() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(standard_simplex(3).volume() == doctest::Approx(1.0 / 6).epsilon(1e-14));
  CHECK(standard_simplex(5).volume() == doctest::Approx(1.0 / 120).epsilon(1e-13));
  CHECK(cross_polytope(4).volume() == doctest::Approx(16.0 / 24).epsilon(1e-13));

  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Polytope p = random_polygon(3 + trial % 10, rng);
    const double oracle_area = oracle::shoelace(testutil::to_p2(p));
    CHECK(testutil::rel_err(p.volume(), oracle_area) < 1e-12);
  }
}

TEST_CASE("volume equals (1/n) sum of h(u) times facet area") {
  Rng rng(2024);
  for (int dim = 2; dim <= 4; ++dim) {
    for (int trial = 0; trial < 200; ++trial) {
      const Polytope p = random_body(dim, rng);
      double sum = 0.0;
      for (const auto& a : surface_area_measure(p).atoms) sum += support(p, a.normal) * a.weight;
      CHECK(testutil::rel_err(sum / dim, p.volume()) < 1e-10);
    }
  }
}

TEST_CASE("support function") {
  const Polytope sq = cube(2);
  CHECK(support(sq, vec({1, 0})) == 1.0);
  CHECK(support(sq, vec({1, 1})) == 2.0);
  CHECK(kind_of([&] { support(sq, vec({0, 0})); }) == ErrorKind::ZeroDirection);
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Polytope p = random_body(3, rng);
    const Vec u = random_sphere(3, 1, rng)[0];
    CHECK(support(p, 2 * u) == doctest::Approx(2 * support(p, u)).epsilon(1e-14));
  }
}

TEST_CASE("surface_area_measure") {
  SUBCASE("unit square") {
    const auto m = surface_area_measure(cube(2, 0, 1));
    CHECK(m.atoms.size() == 4);
    for (const auto& a : m.atoms) {
      CHECK(a.weight == doctest::Approx(1.0));
      CHECK(std::abs(a.normal.cwiseAbs().maxCoeff() - 1.0) < 1e-14);
    }
  }
  SUBCASE("unit cube") {
    const auto m = surface_area_measure(cube(3, 0, 1));
    CHECK(m.atoms.size() == 6);
    for (const auto& a : m.atoms) CHECK(a.weight == doctest::Approx(1.0));
  }
  SUBCASE("triangle") {
    const auto m = surface_area_measure(testutil::triangle());
    REQUIRE(m.atoms.size() == 3);
    int found = 0;
    for (const auto& a : m.atoms) {
      if ((a.normal - vec({0, -1})).norm() < 1e-12) found += a.weight == doctest::Approx(1.0);
      if ((a.normal - vec({-1, 0})).norm() < 1e-12) found += a.weight == doctest::Approx(1.0);
      if ((a.normal - vec({1, 1}) / std::sqrt(2.0)).norm() < 1e-12)
        found += a.weight == doctest::Approx(std::sqrt(2.0));
    }
    CHECK(found == 3);
  }
  SUBCASE("closed and translation invariant") {
    Rng rng(17);
    for (int dim = 2; dim <= 5; ++dim) {
      for (int trial = 0; trial < 20; ++trial) {
        const Polytope p = random_body(dim, rng);
        const auto m = surface_area_measure(p);
        CHECK(m.centroid().norm() <= 1e-8 * m.total_mass());
        const Vec b = 3.0 * random_sphere(dim, 1, rng)[0];
        const auto mt = surface_area_measure(translate(p, b));
        REQUIRE(mt.atoms.size() == m.atoms.size());
        for (std::size_t i = 0; i < m.atoms.size(); ++i) {
          CHECK((mt.atoms[i].normal - m.atoms[i].normal).norm() < 1e-15);
          CHECK(mt.atoms[i].weight == m.atoms[i].weight);
        }
        // rebuilt from translated vertices, not just relabelled
        const auto mh = surface_area_measure(convex_hull(translate(p, b).vertices()));
        CHECK(mh.atoms.size() == m.atoms.size());
        CHECK(testutil::rel_err(mh.total_mass(), m.total_mass()) < 1e-10);
      }
    }
  }
}

TEST_CASE("minkowski_sum") {
  const Polytope sq = cube(2);
  const Polytope origin_sum = minkowski_sum(sq, translate(scale(sq, 1e-300), vec({0, 0})));
  CHECK(same_vertex_set(origin_sum, sq, 1e-12));
  CHECK(same_vertex_set(minkowski_sum(sq, sq), cube(2, -2, 2), 1e-12));
  const Polytope t = testutil::triangle();
  const Polytope diff = minkowski_sum(t, negate(t));
  CHECK(diff.vertices().size() == 6);
  CHECK(diff.volume() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(kind_of([&] { minkowski_sum(sq, cube(3)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("intersect") {
  const auto r = intersect(cube(2, -1, 1), cube(2, 0, 2));
  REQUIRE(r);
  CHECK(r->volume() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(!intersect(cube(2, 0, 1), cube(2, 2, 3)));
  Rng rng(4);
  const Polytope p = random_body(3, rng);
  const auto self = intersect(p, p);
  REQUIRE(self);
  CHECK(hausdorff_distance(*self, p) < 1e-10);
  CHECK(kind_of([&] { intersect(cube(2), cube(3)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("affine_map") {
  const Polytope c = cube(3, 0, 1);
  CHECK(same_vertex_set(affine_map(c, Mat::Identity(3, 3), Vec::Zero(3)), c, 1e-15));
  CHECK(affine_map(c, 2 * Mat::Identity(3, 3), Vec::Zero(3)).volume() == doctest::Approx(8.0));
  Mat singular = Mat::Identity(3, 3);
  singular(2, 2) = 0;
  CHECK(kind_of([&] { affine_map(c, singular, Vec::Zero(3)); }) == ErrorKind::SingularMatrix);

  Rng rng(99);
  std::normal_distribution<double> g(0, 1);
  for (int dim = 2; dim <= 4; ++dim) {
    for (int trial = 0; trial < 20; ++trial) {
      const Polytope p = random_body(dim, rng);
      Mat a(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = g(rng);
      Vec b(dim);
      for (int i = 0; i < dim; ++i) b[i] = g(rng);
      const Polytope q = affine_map(p, a, b);
      CHECK(testutil::rel_err(q.volume(), std::abs(a.determinant()) * p.volume()) < 1e-10);
    }
  }
}

TEST_CASE("centroid and covariance of a box") {
  const Polytope box = affine_map(cube(2, 0, 1), vec({2, 0, 0, 1}).reshaped(2, 2), vec({1, 1}));
  CHECK((box.centroid() - vec({2, 1.5})).norm() < 1e-14);
  const Mat cov = box.covariance();
  CHECK(cov(0, 0) == doctest::Approx(4.0 / 12));
  CHECK(cov(1, 1) == doctest::Approx(1.0 / 12));
  CHECK(std::abs(cov(0, 1)) < 1e-14);
}

TEST_CASE("hausdorff distance in the plane is exact") {
  const Polytope sq = cube(2);
  CHECK(hausdorff_distance(sq, scale(sq, 2.0)) == doctest::Approx(2 * std::sqrt(2.0) - std::sqrt(2.0)));
  CHECK(hausdorff_distance(sq, translate(sq, vec({0.3, 0.4}))) == doctest::Approx(0.5));
}
