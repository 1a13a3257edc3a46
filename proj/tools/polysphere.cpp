#include <iostream>

#include "polysphere/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polysphere::run_cli(args, std::cout, std::cerr);
}
