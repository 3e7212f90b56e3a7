// Entry point: forwards argv to the in-process CLI runner.

#include <iostream>
#include <string>
#include <vector>

#include "insenc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return insenc::cli_run(args, std::cout, std::cerr);
}
