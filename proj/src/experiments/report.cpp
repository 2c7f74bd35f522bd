#include "asymlab/report.hpp"

#include "asymlab/types.hpp"

#include <algorithm>
#include <cmath>

namespace asymlab {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add_close(std::string id, std::string description, std::string source, double expected,
                       double observed, double tol) {
  checks.push_back({std::move(id), std::move(description), std::move(source), expected, observed, tol,
                    std::abs(expected - observed) <= tol});
}

void Report::add_at_most(std::string id, std::string description, std::string source, double bound,
                         double observed, double tol) {
  checks.push_back({std::move(id), std::move(description), std::move(source), {{"at_most", bound}},
                    observed, tol, observed <= bound + tol});
}

void Report::add_at_least(std::string id, std::string description, std::string source, double bound,
                          double observed, double tol) {
  checks.push_back({std::move(id), std::move(description), std::move(source), {{"at_least", bound}},
                    observed, tol, observed >= bound - tol});
}

void Report::add_predicate(std::string id, std::string description, std::string source, Json expected,
                           Json observed, bool pass) {
  checks.push_back({std::move(id), std::move(description), std::move(source), std::move(expected),
                    std::move(observed), 0.0, pass});
}

void Report::observe(std::string id, std::string description, Json value) {
  observations.push_back({std::move(id), std::move(description), std::move(value)});
}

Json to_json(const Report& r) {
  Json j;
  j["schema"] = 1;
  j["suite"] = r.suite;
  j["environment"] = {{"seed", r.seed}, {"max_dim", kMaxDim}, {"zonotope_max_dim", 5}};
  j["checks"] = Json::array();
  std::vector<const Check*> sorted;
  for (const auto& c : r.checks) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->id < b->id; });
  for (const Check* c : sorted)
    j["checks"].push_back({{"id", c->id},
                           {"description", c->description},
                           {"source", c->source},
                           {"expected", c->expected},
                           {"observed", c->observed},
                           {"tolerance", c->tolerance},
                           {"pass", c->pass}});
  j["observations"] = Json::array();
  for (const auto& o : r.observations)
    j["observations"].push_back({{"id", o.id}, {"description", o.description}, {"value", o.value}});
  j["passed"] = r.passed();
  return j;
}

}  // namespace asymlab
