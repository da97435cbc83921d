#include <iostream>
#include <string>
#include <vector>

#include "outbreak/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return outbreak::cli::run(args, std::cout, std::cerr);
}
