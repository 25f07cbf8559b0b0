#include <iostream>
#include <string>
#include <vector>

#include "crossbi/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return crossbi::cli::run(args, std::cout, std::cerr);
}
