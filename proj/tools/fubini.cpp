#include <iostream>
#include <string>
#include <vector>

#include "fubini/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fubini::cli::run(args, std::cout, std::cerr);
}
