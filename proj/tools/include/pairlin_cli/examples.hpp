#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pairlin/report.hpp"

namespace pairlin::cli {

struct ExampleOutcome {
    bool pass = false;
    Report report;
};

struct NamedExample {
    std::string name;
    std::string citation;
    std::function<ExampleOutcome()> run;
};

const std::vector<NamedExample>& named_examples();
// Throws UnknownExample.
const NamedExample& find_example(const std::string& name);

}  // namespace pairlin::cli
