#include <iostream>
#include <string>
#include <vector>

#include "monres/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return monres::cli::run(args, std::cout, std::cerr);
}
