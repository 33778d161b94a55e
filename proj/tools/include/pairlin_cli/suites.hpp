#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pairlin_cli/fixtures.hpp"

namespace pairlin::cli {

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 100;  // random draws per randomized family
};

struct SuiteOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

const std::vector<std::string>& suite_names();
SuiteOutcome run_suite(const std::string& name, const SuiteOptions& options);

// Expected audit flags for registered pairs.
struct FlagExpectation {
    std::string spec;
    std::vector<std::string> holds;
    std::vector<std::string> fails;
};
const std::vector<FlagExpectation>& flag_expectations();

}  // namespace pairlin::cli
