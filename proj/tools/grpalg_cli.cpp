#include <iostream>
#include <string>
#include <vector>

#include "grpalg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return grpalg::run_cli(args, std::cout, std::cerr);
}
