#include <iostream>
#include <string>
#include <vector>

#include "hopfbloch/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hopfbloch::cli::run(args, std::cout, std::cerr);
}
