#include <iostream>
#include <string>
#include <vector>

#include "fibtel/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return fibtel::cli::run(args, std::cout, std::cerr);
}
