#include <iostream>
#include <string>
#include <vector>

#include "ballot/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ballot::cli::run(args, std::cout, std::cerr);
}
