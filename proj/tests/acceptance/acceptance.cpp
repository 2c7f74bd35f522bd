// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// a criterion outside `kKnownFailures` fails, or one inside it passes.

#include "asymlab/measures.hpp"
#include "asymlab/sampling.hpp"
#include "asymlab/search.hpp"
#include "asymlab/suites.hpp"
#include "asymlab/wulff.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

using namespace asymlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Timed {
  Report report;
  double seconds = 0.0;
};

// Each suite runs once; a criterion drawn from a suite is charged the whole
// suite's runtime.
const Timed& suite(const std::string& name) {
  static std::map<std::string, Timed> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    const auto t0 = Clock::now();
    Timed t{run_verify_suite(name, 0), 0.0};
    t.seconds = seconds_since(t0);
    it = cache.emplace(name, std::move(t)).first;
  }
  return it->second;
}

struct Outcome {
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

Outcome from_suite(const std::string& name, const std::set<std::string>& ids, double limit) {
  const Timed& t = suite(name);
  Outcome o{true, t.seconds, ""};
  int found = 0;
  for (const auto& c : t.report.checks) {
    if (!ids.count(c.id)) continue;
    ++found;
    if (!c.pass) {
      o.pass = false;
      o.detail += " " + c.id + "=" + c.observed.dump();
    }
  }
  if (found != static_cast<int>(ids.size())) {
    o.pass = false;
    o.detail += " missing checks";
  }
  if (limit > 0.0 && t.seconds >= limit) {
    o.pass = false;
    o.detail += " too slow";
  }
  return o;
}

Outcome timed(const std::function<Outcome()>& f, double limit) {
  const auto t0 = Clock::now();
  Outcome o = f();
  o.seconds = seconds_since(t0);
  if (limit > 0.0 && o.seconds >= limit) {
    o.pass = false;
    o.detail += " too slow";
  }
  return o;
}

std::string num(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

Outcome minkowski_residuals() {
  Rng rng(700);
  std::uniform_real_distribution<double> spread(0.5, 2.0);
  double worst_residual = 0.0, worst_gap = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int dim = 2 + i % 2;
    const SurfaceMeasure s = blaschke_measure(random_polytope(dim, dim + 4 + i % 5, rng));
    MinkowskiStats stats;
    const Polytope a = solve_minkowski(s, {}, &stats);
    worst_residual = std::max(worst_residual, stats.max_rel_residual);
    MinkowskiOptions other;
    for (std::size_t j = 0; j < s.atoms.size(); ++j) other.initial_heights.push_back(spread(rng));
    // both solutions are centred at the centroid, so translates coincide
    worst_gap = std::max(worst_gap, hausdorff_distance(a, solve_minkowski(s, other)));
  }
  return {worst_residual <= 1e-8 && worst_gap <= 1e-7, 0.0,
          "residual " + num(worst_residual) + ", gap " + num(worst_gap)};
}

Outcome derivative_checks() {
  Rng rng(800);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int dim = 2 + i % 2;
    const Polytope k = random_polytope(dim, dim + 5, rng);
    SupportVector f;
    for (const auto& fa : k.facets()) {
      f.directions.push_back(fa.plane.normal);
      f.heights.push_back(weight(rng));
    }
    for (const auto& u : random_sphere(dim, 3, rng)) {
      f.directions.push_back(u);
      f.heights.push_back(weight(rng));
    }
    worst = std::max(worst, wulff_derivative_check(k, f).rel_error);
  }
  return {worst < 1e-4, 0.0, "worst relative error " + num(worst)};
}

Outcome search_reproduction() {
  SearchOptions o;
  o.dim = 2;
  o.budget = 20000;
  o.seed = 0;
  const SearchResult r = search_extremal(o);
  const double dist = distance_to_triangle(r.best);
  return {r.best_value <= 0.667 && dist < 0.05, 0.0, "m " + num(r.best_value) + ", distance " + num(dist)};
}

// Criteria whose target contradicts a proven bound. They still print FAIL.
const std::map<int, const char*> kKnownFailures = {
    {11, "criteria 4 and 12 force |nabla D_n|/|D_n| < 2^(n/(n-1)), so it cannot track the "
         "exponentially growing reference and |r_n - 1| rises"},
};

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "planar Besicovitch value", [] { return from_suite("planar", {"planar.m_triangle", "planar.m_triangle_grid"}, 5.0); }},
      {2, "planar Blaschke identity", [] { return from_suite("planar", {"planar.blaschke_half_difference"}, 30.0); }},
      {3, "kernel of the triangle is (2/3) of its Blaschke body", [] { return from_suite("planar", {"planar.kernel_is_scaled_blaschke"}, 0.0); }},
      {4, "kernel volume inequality", [] { return from_suite("inequalities", {"kernel_inequality.n2", "kernel_inequality.n3"}, 0.0); }},
      {5, "Blaschke volume bound",
       [] { return from_suite("inequalities", {"blaschke_bound.n2", "blaschke_bound.n3", "blaschke_bound.symmetric_equality"}, 0.0); }},
      {6, "projection body volume ratios",
       [] { return from_suite("simplex", {"simplex.P_2", "simplex.P_3", "simplex.P_4", "cube.P_2", "cube.P_3", "cube.P_4"}, 10.0); }},
      {7, "Minkowski solver residual", [] { return timed(minkowski_residuals, 0.0); }},
      {8, "volume derivative", [] { return timed(derivative_checks, 0.0); }},
      {9, "polar projection body of the cube", [] { return from_suite("simplex", {"cube.R_3"}, 10.0); }},
      {10, "projection body homothety",
       [] {
         return from_suite("problem3", {"problem3.regular_5_gon", "problem3.regular_7_gon", "problem3.simplex_2", "problem3.simplex_3",
                                        "problem3.irregular_quadrilateral"},
                           0.0);
       }},
      {11, "simplex Blaschke ratio asymptotics", [] { return from_suite("asymptotics", {"asymptotics.ratio_2", "asymptotics.trend"}, 0.0); }},
      {12, "Stein bound and Minkowski inequality",
       [] {
         return from_suite("inequalities", {"stein.n2", "stein.n3", "stein.n4", "minkowski.n2", "minkowski.n3", "minkowski.n4"}, 60.0);
       }},
      {13, "annealing search finds the triangle", [] { return timed(search_reproduction, 120.0); }},
  };

  int failures = 0, unexpected = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, 0.0, std::string(" error: ") + e.what()};
    }
    const bool known = kKnownFailures.count(c.number) > 0;
    if (!o.pass) ++failures;
    if (o.pass == known) ++unexpected;
    std::string detail = o.detail;
    if (!detail.empty() && detail[0] == ' ') detail.erase(0, 1);
    std::printf("%s %2d %-52s %7.2fs%s%s\n", o.pass ? "PASS" : "FAIL", c.number, c.name, o.seconds,
                detail.empty() ? "" : "  ", detail.c_str());
    if (known) std::printf("     known failure: %s%s\n", kKnownFailures.at(c.number), o.pass ? " (but it passed)" : "");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass, %d unexpected outcome(s)\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
