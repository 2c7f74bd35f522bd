#include "asymlab/suites.hpp"

#include "asymlab/bodies.hpp"
#include "asymlab/error.hpp"
#include "asymlab/kernel.hpp"
#include "asymlab/measures.hpp"
#include "asymlab/projection.hpp"
#include "asymlab/sampling.hpp"
#include "asymlab/wulff.hpp"
#include "oracles/montecarlo.hpp"
#include "oracles/planar.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace asymlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<oracle::P2> to_p2(const Polytope& p) {
  std::vector<oracle::P2> out;
  for (const auto& v : p.vertices()) out.push_back({v[0], v[1]});
  return oracle::monotone_hull(out);
}

Polytope from_p2(const std::vector<oracle::P2>& pts) {
  PointList list;
  for (const auto& [x, y] : pts) {
    Vec v(2);
    v << x, y;
    list.push_back(v);
  }
  return convex_hull(list);
}

Polytope triangle() {
  Vec a(2), b(2), c(2);
  a << 0, 0;
  b << 1, 0;
  c << 0, 1;
  return convex_hull(PointList{a, b, c});
}

// sup over directions of |h_P - s h_Q|
double support_gap(const Polytope& p, const Polytope& q, double s, int directions) {
  double worst = 0.0;
  for (const auto& u : quasi_uniform_directions(p.dim(), directions))
    worst = std::max(worst, std::abs(support(p, u) - s * support(q, u)));
  return worst;
}

// The corpora shared by the inequality checks.
Polytope corpus_body(int dim, Rng& rng) { return random_polytope(dim, dim == 2 ? 8 : 10, rng); }

Polytope property_body(int dim, Rng& rng) { return random_polytope(dim, dim == 4 ? 6 : 8, rng); }

Polytope symmetric_body(int dim, int pairs, Rng& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    PointList pts;
    for (int i = 0; i < pairs; ++i) {
      Vec p(dim);
      for (int d = 0; d < dim; ++d) p[d] = gauss(rng);
      pts.push_back(p);
      pts.push_back(-p);
    }
    try {
      return convex_hull(pts);
    } catch (const Error&) {
    }
  }
}

void planar_suite(Report& r) {
  Rng rng(r.seed);
  const Polytope t = triangle();
  const double m = asymmetry_m(t);
  r.add_close("planar.m_triangle", "asymmetry m of the triangle", "derived", 2.0 / 3.0, m, 1e-6);
  const auto grid = oracle::asymmetry_by_grid(to_p2(t));
  r.add_close("planar.m_triangle_grid", "m of the triangle against a planar grid search", "derived",
              grid.value, m, 1e-6);

  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Polytope k = random_polygon(3 + i % 8, rng);
    auto pts = to_p2(k);
    std::vector<oracle::P2> neg;
    for (auto [x, y] : pts) neg.push_back({-0.5 * x, -0.5 * y});
    for (auto& [x, y] : pts) {
      x *= 0.5;
      y *= 0.5;
    }
    const Polytope half_diff = from_p2(oracle::minkowski_sum(pts, neg));
    worst = std::max(worst, hausdorff_distance(blaschke_body(k), half_diff) / k.diameter());
  }
  r.add_at_most("planar.blaschke_half_difference",
                "Hausdorff distance of the Blaschke body to (K - K)/2 over 50 polygons, relative to diameter",
                "paper", 0.0, worst, 1e-6);

  const KernelResult kr = symmetric_kernel(t);
  const Polytope centred = recentre_at_pseudo_center(t);
  const auto kernel = intersect(centred, negate(centred));
  const Polytope nabla = blaschke_body(t);
  const double gap = kernel ? support_gap(*kernel, nabla, 2.0 / 3.0, 256) : kInf;
  r.add_at_most("planar.kernel_is_scaled_blaschke",
                "sup over 256 directions of |h(K ∩ -K) - (2/3) h(Blaschke body)| for the recentred triangle",
                "paper", 0.0, gap, 1e-6);
  r.add_close("planar.blaschke_ratio_triangle", "Blaschke body volume over triangle volume", "derived", 1.5,
              nabla.volume() / t.volume(), 1e-7);
  r.observe("planar.pseudo_center_triangle", "pseudo-center of conv{0, e1, e2}", vec_json(kr.center));
}

void simplex_suite(Report& r) {
  const double expected_p[] = {6.0, 18.0, 160.0 / 3.0};
  for (int n = 2; n <= 4; ++n) {
    r.add_close("simplex.P_" + std::to_string(n), "Schneider P of the " + std::to_string(n) + "-simplex",
                "paper", expected_p[n - 2], schneider_P(standard_simplex(n)), 1e-6 * expected_p[n - 2]);
    const double cube_p = std::pow(2.0, n);
    r.add_close("cube.P_" + std::to_string(n), "Schneider P of the " + std::to_string(n) + "-cube", "paper",
                cube_p, schneider_P(cube(n)), 1e-9 * cube_p);
  }
  const Estimate rc = schneider_R(cube(3), 1 << 16, r.seed);
  r.add_close("cube.R_3", "Schneider R of the 3-cube by sphere quadrature, 2^16 points", "derived", 4.0 / 3.0,
              rc.value, 0.01 * 4.0 / 3.0);

  // m of the 3-simplex against a hit-or-miss estimate at the computed pseudo-center
  const Polytope s3 = standard_simplex(3);
  const KernelResult k3 = symmetric_kernel(s3);
  const Vec x = k3.center;
  const auto est = oracle::hit_or_miss<3>(
      [&](const std::array<double, 3>& y) {
        return oracle::in_standard_simplex<3>({y[0] - x[0], y[1] - x[1], y[2] - x[2]}) &&
               oracle::in_standard_simplex<3>({-y[0], -y[1], -y[2]});
      },
      {-1, -1, -1}, {0, 0, 0}, 1'000'000, r.seed + 1);
  r.add_close("simplex.m_3_montecarlo", "m of the 3-simplex against a Monte Carlo volume (4 standard errors)",
              "derived", est.value / s3.volume(), k3.m_value, 4 * est.stderr_ / s3.volume());

  Json table = Json::array();
  for (int n = 2; n <= 5; ++n) {
    const Estimate a = schneider_R(standard_simplex(n), 1 << 16, r.seed);
    const Estimate b = schneider_R(cube(n), 1 << 16, r.seed);
    const double ratio = a.value / b.value;
    const double err = ratio * std::hypot(a.stderr_ / a.value, b.stderr_ / b.value);
    table.push_back({{"n", n}, {"ratio", ratio}, {"stderr", err}});
  }
  r.observe("simplex.R_ratio", "R(simplex)/R(cube) for n = 2..5", table);
  Json ms = Json::array();
  for (int n = 2; n <= 4; ++n) ms.push_back({{"n", n}, {"m", asymmetry_m(standard_simplex(n))}});
  r.observe("simplex.m", "computed m of the n-simplex; no reference value exists for n >= 3", ms);
}

void inequalities_suite(Report& r) {
  for (int n = 2; n <= 3; ++n) {
    Rng rng(r.seed * 1000 + n);
    double worst_kernel_ratio = 0.0, worst_ratio = kInf;
    for (int i = 0; i < 100; ++i) {
      const Polytope k = recentre_at_pseudo_center(corpus_body(n, rng));
      const auto kernel = intersect(k, negate(k));
      const double q = kernel ? kernel->volume() : 0.0;
      const double nabla = blaschke_body(k).volume();
      const double lhs = std::pow(q, 1.0 / n) * std::pow(nabla, (n - 1.0) / n);
      worst_kernel_ratio = std::max(worst_kernel_ratio, lhs / k.volume());
      worst_ratio = std::min(worst_ratio, nabla / k.volume());
    }
    const std::string d = std::to_string(n);
    r.add_at_most("kernel_inequality.n" + d,
                  "max of |K ∩ -K|^(1/n) |Blaschke body|^((n-1)/n) / |K| over 100 recentred bodies, n = " + d,
                  "paper", 1.0, worst_kernel_ratio, 1e-9);
    r.add_at_least("blaschke_bound.n" + d, "min of |Blaschke body| / |K| over the same bodies, n = " + d,
                   "paper", 1.0, worst_ratio, 1e-9);
  }

  Rng srng(r.seed * 1000 + 7);
  std::vector<Polytope> symmetric{cube(2), cube(3), cross_polytope(3), regular_polygon(6), cube(4)};
  for (int i = 0; i < 4; ++i) symmetric.push_back(symmetric_body(2 + i % 2, 5, srng));
  double worst_eq = 0.0;
  for (const auto& k : symmetric) worst_eq = std::max(worst_eq, std::abs(blaschke_body(k).volume() / k.volume() - 1.0));
  r.add_at_most("blaschke_bound.symmetric_equality",
                "max of ||Blaschke body| / |K| - 1| over centrally symmetric bodies", "paper", 0.0, worst_eq, 1e-7);

  for (int n = 2; n <= 4; ++n) {
    Rng rng(r.seed * 1000 + 10 + n);
    double min_m = kInf, min_gap = kInf;
    for (int i = 0; i < 500; ++i) min_m = std::min(min_m, asymmetry_m(property_body(n, rng)));
    for (int i = 0; i < 500; ++i) {
      const Polytope l = property_body(n, rng);
      const Polytope k = property_body(n, rng);
      min_gap = std::min(min_gap, minkowski_inequality_gap(l, k) / mixed_volume_v1(l, k));
    }
    const std::string d = std::to_string(n);
    const double stein = std::pow(2.0, -n);
    r.add_predicate("stein.n" + d, "min of m over 500 random bodies exceeds 2^-n, n = " + d, "paper",
                    {{"greater_than", stein}}, min_m, min_m > stein);
    r.add_at_least("minkowski.n" + d,
                   "min over 500 random pairs of the Minkowski inequality gap relative to V1, n = " + d, "paper",
                   0.0, min_gap, 1e-9);
  }
}

void asymptotics_suite(Report& r) {
  Json ratios = Json::array();
  std::vector<double> dev;
  for (int n = 2; n <= 5; ++n) {
    const Polytope s = standard_simplex(n);
    const double ratio = blaschke_body(s).volume() / s.volume();
    const double rn = ratio / (std::sqrt(1.5) * std::numbers::e * std::pow(std::numbers::e / 2, n));
    dev.push_back(std::abs(rn - 1.0));
    ratios.push_back({{"n", n}, {"blaschke_ratio", ratio}, {"r", rn}});
    if (n == 2)
      r.add_close("asymptotics.ratio_2", "Blaschke body volume over simplex volume, n = 2", "derived", 1.5, ratio,
                  1e-7);
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < dev.size(); ++i) decreasing = decreasing && dev[i] < dev[i - 1];
  r.add_predicate("asymptotics.trend",
                  "|r_n - 1| strictly decreasing for n = 2..5, r_n the Blaschke ratio over sqrt(3/2) e (e/2)^n",
                  "paper", "strictly decreasing", dev, decreasing);
  r.observe("asymptotics.table", "Blaschke body volume ratios of simplices", ratios);
}

void problem3_suite(Report& r) {
  auto gap_of = [](const Polytope& body) {
    const Polytope k = recentre_at_pseudo_center(body);
    const auto kernel = intersect(k, negate(k));
    if (!kernel) return kInf;
    return homothety_check(projection_body(k), projection_body(*kernel), 1e-5).max_gap;
  };
  const std::pair<std::string, Polytope> yes[] = {{"regular_5_gon", regular_polygon(5)},
                                                  {"regular_7_gon", regular_polygon(7)},
                                                  {"simplex_2", standard_simplex(2)},
                                                  {"simplex_3", standard_simplex(3)}};
  for (const auto& [name, body] : yes)
    r.add_at_most("problem3." + name,
                  "projection bodies of K and K ∩ -K homothetic (relative support gap), K = " + name, "paper", 0.0,
                  gap_of(body), 1e-5);
  Rng rng(r.seed * 1000 + 21);
  const double quad = gap_of(random_polygon(4, rng));
  r.add_predicate("problem3.irregular_quadrilateral",
                  "projection bodies of a random quadrilateral and its kernel are not homothetic", "derived",
                  {{"greater_than", 1e-5}}, quad, quad > 1e-5);

  Json remark = Json::array();
  const std::pair<std::string, Polytope> few_facets[] = {
      {"cube-2", cube(2)}, {"regular-6-gon", regular_polygon(6)}, {"cube-3", cube(3)}, {"cross-3", cross_polytope(3)}};
  for (const auto& [name, k] : few_facets) {
    const Polytope pk = zonotope_polytope(projection_body(k));
    remark.push_back({{"body", name}, {"facets", k.facets().size()}, {"P_of_projection_body", schneider_P(pk)},
                      {"two_to_n", std::pow(2.0, k.dim())}});
  }
  r.observe("problem3.remark_P_projection_body",
            "P of the projection body for symmetric bodies with at most 2(n+1) facets", remark);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"planar", "simplex", "inequalities", "asymptotics", "problem3"};
  return names;
}

Report run_verify_suite(const std::string& suite, std::uint64_t seed) {
  Report r;
  r.suite = suite;
  r.seed = seed;
  if (suite == "planar")
    planar_suite(r);
  else if (suite == "simplex")
    simplex_suite(r);
  else if (suite == "inequalities")
    inequalities_suite(r);
  else if (suite == "asymptotics")
    asymptotics_suite(r);
  else if (suite == "problem3")
    problem3_suite(r);
  else
    throw Error(ErrorKind::UnknownSuite, "no suite named '" + suite + "'");
  return r;
}

}  // namespace asymlab
