#include <iostream>
#include <string>
#include <vector>

#include "fcore/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fcore::cli::run(args, std::cout, std::cerr);
}
