#include <iostream>
#include <string>
#include <vector>

#include "cdcrit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cdcrit::cli::run(args, std::cout, std::cerr);
}
