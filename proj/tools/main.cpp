#include <iostream>
#include <vector>

#include "g2flat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return g2flat::run_cli(args, std::cout);
}
