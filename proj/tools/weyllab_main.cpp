#include <iostream>
#include <string>
#include <vector>

#include "weyllab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return weyllab::cli::run(args, std::cout, std::cerr);
}
