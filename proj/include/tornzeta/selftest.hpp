#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tornzeta/types.hpp"

namespace tornzeta {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;  // numeric path inadmissible; not counted as failure
    double statistic = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

/// Named verification suites for `verify <suite>`.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed,
                                   int points, const EvalOptions& opt = default_options());

/// The full acceptance battery (fixed seeds and tolerances).
std::vector<CheckResult> run_acceptance(const EvalOptions& opt = default_options());

}  // namespace tornzeta
