// Command line front end; every verb reads and writes JSON.

#include "CLI11.hpp"
#include "asymlab/error.hpp"
#include "asymlab/io.hpp"
#include "asymlab/kernel.hpp"
#include "asymlab/measures.hpp"
#include "asymlab/plot.hpp"
#include "asymlab/projection.hpp"
#include "asymlab/search.hpp"
#include "asymlab/suites.hpp"
#include "asymlab/wulff.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

using namespace asymlab;

namespace {

struct Common {
  std::string in, out;
  std::optional<std::uint64_t> seed;

  std::uint64_t effective_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("ASYMLAB_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "ASYMLAB_SEED is not an unsigned integer");
      }
    }
    return 0;
  }
};

void add_common(CLI::App* cmd, Common& c, bool needs_in) {
  auto* opt = cmd->add_option("--in", c.in, "input JSON file, or a builtin body name");
  if (needs_in) opt->required();
  cmd->add_option("--out", c.out, "output path (default: stdout)");
  cmd->add_option("--seed", c.seed, "random seed (default: $ASYMLAB_SEED or 0)");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty())
    std::cout << text;
  else
    write_text_file(c.out, text);
}

void emit(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

Json zonotope_json(const Zonotope& z) {
  Json j;
  j["dim"] = z.dim;
  j["generators"] = Json::array();
  for (const auto& g : z.generators) j["generators"].push_back(vec_json(g));
  j["degenerate"] = z.degenerate();
  return j;
}

Json estimate_json(const Estimate& e) { return {{"value", e.value}, {"stderr", e.stderr_}}; }

int run_kernel(const Common& c) {
  const Polytope k = load_polytope(c.in);
  const KernelResult r = symmetric_kernel(k);
  emit(c, Json{{"m", r.m_value},
               {"q", r.q_value},
               {"volume", k.volume()},
               {"pseudo_center", vec_json(r.center)},
               {"kernel", to_json(r.kernel)},
               {"recentred_kernel", to_json(r.recentred_kernel())}});
  return 0;
}

int run_blaschke(const Common& c) {
  const Polytope k = load_polytope(c.in);
  const Polytope b = blaschke_body(k);
  emit(c, Json{{"blaschke_body", to_json(b)}, {"volume_ratio", b.volume() / k.volume()}});
  return 0;
}

int run_minkowski(const Common& c) {
  const SurfaceMeasure s = load_measure(c.in);
  MinkowskiStats stats;
  const Polytope p = solve_minkowski(s, {}, &stats);
  const auto& d = stats.diagnostics;
  emit(c, Json{{"polytope", to_json(p)},
               {"iterations", stats.iterations},
               {"gradient_norm", stats.gradient_norm},
               {"max_rel_residual", stats.max_rel_residual},
               {"diagnostics",
                {{"total_mass", d.total_mass},
                 {"centroid_norm", d.centroid_norm},
                 {"rank", d.rank},
                 {"even", d.even},
                 {"conditioning", d.conditioning},
                 {"ill_conditioned", d.ill_conditioned}}}});
  return 0;
}

int run_projbody(const Common& c) {
  const Polytope k = load_polytope(c.in);
  const Zonotope z = projection_body(k);
  Json j{{"projection_body", zonotope_json(z)}};
  if (k.dim() <= 5) j["volume"] = zonotope_volume(z);
  if (k.dim() <= 3) j["polytope"] = to_json(zonotope_polytope(z));
  emit(c, j);
  return 0;
}

int run_invariants(const Common& c, int samples) {
  const Polytope k = load_polytope(c.in);
  Json j{{"dim", k.dim()}, {"volume", k.volume()}};
  if (k.dim() <= 5) j["P"] = schneider_P(k);
  j["R"] = estimate_json(schneider_R(k, samples, c.effective_seed()));
  j["m"] = asymmetry_m(k);
  j["blaschke_ratio"] = blaschke_body(k).volume() / k.volume();
  emit(c, j);
  return 0;
}

int run_verify(const Common& c, const std::string& suite) {
  const Report r = run_verify_suite(suite, c.effective_seed());
  emit(c, to_json(r));
  for (const auto& ch : r.checks)
    std::cerr << (ch.pass ? "PASS " : "FAIL ") << ch.id << "\n";
  return r.passed() ? 0 : 1;
}

int run_search(const Common& c, int dim, const std::string& objective, int budget) {
  SearchOptions o;
  o.dim = dim;
  o.objective = parse_objective(objective);
  o.budget = budget;
  o.seed = c.effective_seed();
  const SearchResult r = search_extremal(o);
  Json trace = Json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"evaluation", t.evaluation}, {"temperature", t.temperature}, {"current", t.current}, {"best", t.best}});
  Json j{{"objective", objective},
         {"dim", dim},
         {"seed", o.seed},
         {"budget", budget},
         {"evaluations", r.evaluations},
         {"accepted", r.accepted},
         {"budget_exhausted", r.budget_exhausted},
         {"best_value", r.best_value},
         {"best", to_json(r.best)},
         {"trace", trace}};
  if (dim == 2) j["distance_to_triangle"] = distance_to_triangle(r.best);
  emit(c, j);
  return 0;
}

int run_plot(const Common& c) {
  if (c.in.empty()) throw Error(ErrorKind::InvalidArgument, "--in is required");
  // a report has "checks"; anything else is read as a body
  if (const auto j = std::filesystem::exists(c.in) ? read_json_file(c.in) : Json(); j.contains("checks")) {
    Report r;
    r.suite = j.value("suite", "");
    for (const auto& ch : j["checks"])
      r.checks.push_back({ch.value("id", ""), "", "", Json(), Json(), 0.0, ch.value("pass", false)});
    emit(c, report_svg(r));
  } else {
    emit(c, body_overlay_svg(load_polytope(c.in)));
  }
  return 0;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnknownSuite:
    case ErrorKind::UnsupportedDim:
    case ErrorKind::DimensionMismatch:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymmetry measures of convex polytopes"};
  app.require_subcommand(1);
  Common common;

  auto* kernel = app.add_subcommand("kernel", "symmetric kernel, pseudo-center and m");
  add_common(kernel, common, true);
  auto* blaschke = app.add_subcommand("blaschke", "Blaschke body");
  add_common(blaschke, common, true);
  auto* minkowski = app.add_subcommand("minkowski-solve", "polytope with a given surface area measure");
  add_common(minkowski, common, true);
  auto* projbody = app.add_subcommand("projbody", "projection body as a zonotope");
  add_common(projbody, common, true);
  auto* invariants = app.add_subcommand("invariants", "P, R, m and the Blaschke volume ratio");
  add_common(invariants, common, true);
  int samples = 1 << 16;
  invariants->add_option("--samples", samples, "sphere points for R")->check(CLI::Range(2, 1 << 24));
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, common, false);
  std::string suite;
  verify->add_option("--suite", suite, "planar, simplex, inequalities, asymptotics or problem3")->required();
  auto* search = app.add_subcommand("search", "annealing search for extremal bodies");
  add_common(search, common, false);
  int dim = 2, budget = 20000;
  std::string objective = "min-m";
  search->add_option("--dim", dim, "2 or 3");
  search->add_option("--objective", objective, "min-m or max-blaschke-ratio");
  search->add_option("--budget", budget, "objective evaluations");
  auto* plot = app.add_subcommand("plot", "SVG of a planar body or of a report");
  add_common(plot, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (kernel->parsed()) return run_kernel(common);
    if (blaschke->parsed()) return run_blaschke(common);
    if (minkowski->parsed()) return run_minkowski(common);
    if (projbody->parsed()) return run_projbody(common);
    if (invariants->parsed()) return run_invariants(common, samples);
    if (verify->parsed()) return run_verify(common, suite);
    if (search->parsed()) return run_search(common, dim, objective, budget);
    if (plot->parsed()) return run_plot(common);
  } catch (const Error& e) {
    std::cerr << "asymlab: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 2;
}
