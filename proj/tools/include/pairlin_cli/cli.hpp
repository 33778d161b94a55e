#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pairlin/error.hpp"

namespace pairlin::cli {

enum ExitCode : int { Ok = 0, ClaimFailed = 1, InputError = 2, CapOrUndecidable = 3 };

ExitCode exit_code_for(ErrorCode code);

// Parses argv (argv[0] is the program name) and runs one command.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairlin::cli
