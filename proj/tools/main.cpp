#include <iostream>
#include <string>
#include <vector>

#include "tamcy/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tamcy::cli_main(args, std::cout, std::cerr);
}
