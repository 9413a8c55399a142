// Thin wrapper; all behaviour lives in run_cli so tests can call it directly.
#include "prg/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return prg::run_cli(args, std::cout, std::cerr);
}
