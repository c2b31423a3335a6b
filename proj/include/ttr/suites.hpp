#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ttr/census.hpp"

namespace ttr {

struct SuiteOptions {
    std::uint64_t seed = 20250809;
    int workers = 0;
    CensusOptions census;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::vector<std::string> notes;  // human-readable detail, one finding per line
    double seconds = 0.0;
};

/// Names of the named verification suites, in canonical run order.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws ParameterError for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace ttr
