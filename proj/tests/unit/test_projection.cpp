#include "asymlab/bodies.hpp"
#include "asymlab/error.hpp"
#include "asymlab/kernel.hpp"
#include "asymlab/projection.hpp"
#include "asymlab/sampling.hpp"
#include "asymlab/wulff.hpp"
#include "doctest.h"
#include "oracles/planar.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace asymlab;
using testutil::poly;
using testutil::vec;

namespace {

Zonotope zono(std::initializer_list<std::initializer_list<double>> gens) {
  Zonotope z;
  for (auto g : gens) z.generators.push_back(vec(g));
  z.dim = static_cast<int>(z.generators[0].size());
  return z;
}

// All 2^m signed sums of the generators.
PointList signed_sums(const Zonotope& z) {
  const int m = static_cast<int>(z.generators.size());
  PointList pts;
  for (int mask = 0; mask < (1 << m); ++mask) {
    Vec p = Vec::Zero(z.dim);
    for (int i = 0; i < m; ++i) p += (mask >> i & 1 ? 1.0 : -1.0) * z.generators[i];
    pts.push_back(p);
  }
  return pts;
}

double half_abs_integral(const Polytope& k, const Vec& u) {
  double h = 0.0;
  for (const auto& f : k.facets()) h += 0.5 * f.area * std::abs(f.plane.normal.dot(u));
  return h;
}

}  // namespace

TEST_CASE("projection_body support function") {
  Rng rng(41);
  for (int dim = 2; dim <= 4; ++dim) {
    const Polytope k = random_polytope(dim, dim + 5, rng);
    const Zonotope z = projection_body(k);
    CHECK(static_cast<int>(z.generators.size()) <= static_cast<int>(k.facets().size()));
    for (const auto& u : random_sphere(dim, 50, rng))
      CHECK(z.support(u) == doctest::Approx(half_abs_integral(k, u)).epsilon(1e-12));
  }
}

TEST_CASE("projection body of the unit cube") {
  const Zonotope z = projection_body(cube(3, 0.0, 1.0));
  CHECK(z.generators.size() == 3);
  CHECK(zonotope_volume(z) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(same_vertex_set(zonotope_polytope(z), cube(3), 1e-12));
}

TEST_CASE("projection body ignores reflection, translation and Blaschke symmetrisation") {
  Rng rng(42);
  for (int dim = 2; dim <= 3; ++dim) {
    const Polytope k = random_polytope(dim, 8, rng);
    const Zonotope z = projection_body(k);
    const Zonotope zn = projection_body(negate(k));
    const Zonotope zt = projection_body(translate(k, Vec::Constant(dim, 2.5)));
    const Zonotope zb = projection_body(blaschke_body(k));
    for (const auto& u : random_sphere(dim, 50, rng)) {
      CHECK(zn.support(u) == doctest::Approx(z.support(u)).epsilon(1e-12));
      CHECK(zt.support(u) == doctest::Approx(z.support(u)).epsilon(1e-12));
      CHECK(zb.support(u) == doctest::Approx(z.support(u)).epsilon(1e-8));
    }
  }
}

TEST_CASE("zonotope_volume") {
  CHECK(zonotope_volume(zono({{1, 0}, {0, 1}})) == doctest::Approx(4.0));
  CHECK(zonotope_volume(zono({{1, 0}, {0, 1}, {1, 1}})) == doctest::Approx(12.0));
  CHECK(zonotope_volume(zono({{1, 0, 0}, {2, 0, 0}})) == 0.0);
  CHECK(zono({{1, 0, 0}, {2, 0, 0}, {0, 1, 0}}).degenerate());

  Rng rng(43);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    Zonotope z2{2, {}};
    for (int i = 0; i < 3 + trial; ++i) z2.generators.push_back(vec({gauss(rng), gauss(rng)}));
    std::vector<oracle::P2> pts;
    for (const auto& p : signed_sums(z2)) pts.push_back({p[0], p[1]});
    CHECK(zonotope_volume(z2) == doctest::Approx(oracle::shoelace(oracle::monotone_hull(pts))).epsilon(1e-9));

    Zonotope z3{3, {}};
    for (int i = 0; i < 3 + trial % 6; ++i) z3.generators.push_back(vec({gauss(rng), gauss(rng), gauss(rng)}));
    const double hull_volume = convex_hull(signed_sums(z3)).volume();
    CHECK(zonotope_volume(z3) == doctest::Approx(hull_volume).epsilon(1e-9));
    CHECK(zonotope_polytope(z3).volume() == doctest::Approx(hull_volume).epsilon(1e-9));
  }
}

TEST_CASE("zonotope_volume limits") {
  Zonotope big{6, {}};
  for (int i = 0; i < 6; ++i) big.generators.push_back(unit_vector(6, i));
  bool unsupported = false;
  try {
    zonotope_volume(big);
  } catch (const Error& e) {
    unsupported = e.kind() == ErrorKind::UnsupportedDim;
  }
  CHECK(unsupported);

  Zonotope many{3, {}};
  Rng rng(44);
  for (const auto& u : random_sphere(3, 65, rng)) many.generators.push_back(u);
  bool too_large = false;
  try {
    zonotope_volume(many);
  } catch (const Error& e) {
    too_large = e.kind() == ErrorKind::TooLarge;
  }
  CHECK(too_large);
}

TEST_CASE("schneider_P of simplices and cubes") {
  const double simplex[] = {6.0, 18.0, 160.0 / 3.0};
  for (int n = 2; n <= 4; ++n) {
    CHECK(schneider_P(standard_simplex(n)) == doctest::Approx(simplex[n - 2]).epsilon(1e-6));
    CHECK(schneider_P(cube(n)) == doctest::Approx(std::pow(2.0, n)).epsilon(1e-9));
  }
}

TEST_CASE("schneider_P is affine invariant") {
  Rng rng(45);
  for (int dim = 2; dim <= 4; ++dim) {
    const Polytope k = random_polytope(dim, dim + 4, rng);
    Mat a = Mat::Identity(dim, dim);
    a(0, 1) = 0.7;
    a(dim - 1, 0) = -1.1;
    a(1, 1) = 3.0;
    CHECK(schneider_P(affine_map(k, a, Vec::Constant(dim, -0.4))) ==
          doctest::Approx(schneider_P(k)).epsilon(1e-8));
  }
}

TEST_CASE("P(K) through the Blaschke body") {
  Rng rng(46);
  for (int dim = 2; dim <= 3; ++dim) {
    for (int trial = 0; trial < 5; ++trial) {
      const Polytope k = random_polytope(dim, dim + 5, rng);
      const Polytope b = blaschke_body(k);
      const double chain = schneider_P(b) * std::pow(b.volume() / k.volume(), dim - 1);
      CHECK(schneider_P(k) == doctest::Approx(chain).epsilon(1e-8));
    }
  }
}

TEST_CASE("polar_volume") {
  const Zonotope box = projection_body(cube(3, 0.0, 1.0));
  const Estimate e = polar_volume(box);
  CHECK(std::abs(e.value - 4.0 / 3.0) <= 3 * e.stderr_);
  CHECK(e.stderr_ > 0);

  Zonotope doubled = box;
  for (auto& g : doubled.generators) g *= 2.0;
  CHECK(polar_volume(doubled).value == doctest::Approx(e.value / 8).epsilon(1e-12));

  // square [-1,1]^2: polar is the cross-polytope of area 2
  const Estimate sq = polar_volume(zono({{1, 0}, {0, 1}}), 1 << 16, 3);
  CHECK(std::abs(sq.value - 2.0) <= 4 * sq.stderr_);

  Rng rng(47);
  Zonotope ball{4, {}};
  for (const auto& u : random_sphere(4, 30, rng)) ball.generators.push_back(u);
  const Estimate coarse = polar_volume(ball, 1 << 12, 5);
  const Estimate fine = polar_volume(ball, 1 << 14, 5);
  CHECK(fine.stderr_ == doctest::Approx(coarse.stderr_ / 2).epsilon(0.15));
  CHECK(std::abs(fine.value - coarse.value) <= 4 * coarse.stderr_);

  bool degenerate = false;
  try {
    polar_volume(zono({{1, 0, 0}, {0, 1, 0}}));
  } catch (const Error& ex) {
    degenerate = ex.kind() == ErrorKind::DegenerateZonotope;
  }
  CHECK(degenerate);
}

TEST_CASE("schneider_R") {
  const Estimate r = schneider_R(cube(3));
  CHECK(r.value == doctest::Approx(4.0 / 3.0).epsilon(0.01));

  Rng rng(48);
  const Polytope k = random_polytope(3, 9, rng);
  Mat a = Mat::Identity(3, 3);
  a(0, 2) = 0.5;
  a(1, 1) = 0.4;
  const Estimate r1 = schneider_R(k), r2 = schneider_R(affine_map(k, a, vec({1, 2, 3})));
  CHECK(std::abs(r1.value - r2.value) <= 4 * std::hypot(r1.stderr_, r2.stderr_));
}

TEST_CASE("homothety_check") {
  Rng rng(49);
  const Polytope k = random_polytope(3, 8, rng);
  const Homothety h = homothety_check(translate(scale(k, 2.0), vec({1, -1, 4})), k, 1e-9);
  CHECK(h.homothetic);
  CHECK(h.scale == doctest::Approx(2.0).epsilon(1e-12));
  CHECK((h.shift - vec({1, -1, 4})).norm() < 1e-9);

  CHECK_FALSE(homothety_check(cube(2), testutil::triangle(), 1e-3).homothetic);
}

TEST_CASE("projection bodies of a regular pentagon and its kernel are homothetic") {
  const Polytope k = recentre_at_pseudo_center(regular_polygon(5));
  const auto kernel = intersect(k, negate(k));
  REQUIRE(kernel);
  const Homothety h = homothety_check(projection_body(k), projection_body(*kernel), 1e-5);
  CHECK(h.homothetic);

  Rng rng(50);
  const Polytope quad = recentre_at_pseudo_center(random_polygon(4, rng));
  const auto qk = intersect(quad, negate(quad));
  REQUIRE(qk);
  CHECK_FALSE(homothety_check(projection_body(quad), projection_body(*qk), 1e-5).homothetic);
}
