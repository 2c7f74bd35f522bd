#pragma once

#include "asymlab/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace asymlab {

/// "planar", "simplex", "inequalities", "asymptotics" or "problem3".
/// Throws UnknownSuite otherwise.
Report run_verify_suite(const std::string& suite, std::uint64_t seed);

const std::vector<std::string>& suite_names();

}  // namespace asymlab
