#include <iostream>
#include <string>
#include <vector>

#include "haarcalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return haarcalc::run_cli(args, std::cout, std::cerr);
}
