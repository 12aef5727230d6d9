#include <iostream>
#include <vector>

#include "tautring/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tautring::run(args, std::cout, std::cerr);
}
