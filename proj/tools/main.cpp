#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wz::cli::run_command(args, std::cout, std::cerr, std::cin);
}
