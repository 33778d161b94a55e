#include <iostream>

#include "pairlin_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return pairlin::cli::run_command(args, std::cout, std::cerr);
}
