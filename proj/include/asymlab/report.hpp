#pragma once

#include "asymlab/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace asymlab {

/// Where an expected value comes from: "paper" (stated there), "derived"
/// (from an independent oracle or a short calculation) or "trivial".
struct Check {
  std::string id;
  std::string description;
  std::string source;
  Json expected;
  Json observed;
  double tolerance = 0.0;
  bool pass = false;
};

/// Recorded numbers that carry no assertion.
struct Observation {
  std::string id;
  std::string description;
  Json value;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  std::vector<Observation> observations;

  bool passed() const;

  /// |expected - observed| <= tol
  void add_close(std::string id, std::string description, std::string source, double expected,
                 double observed, double tol);
  /// observed <= bound + tol
  void add_at_most(std::string id, std::string description, std::string source, double bound,
                   double observed, double tol);
  /// observed >= bound - tol
  void add_at_least(std::string id, std::string description, std::string source, double bound,
                    double observed, double tol);
  void add_predicate(std::string id, std::string description, std::string source, Json expected,
                     Json observed, bool pass);
  void observe(std::string id, std::string description, Json value);
};

/// Schema 1. Nothing time-dependent is written, so equal seeds give equal bytes.
Json to_json(const Report& r);

}  // namespace asymlab
