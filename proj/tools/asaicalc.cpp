#include <iostream>
#include <vector>

#include "asai/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return asai::run_command(args, std::cout, std::cerr);
}
