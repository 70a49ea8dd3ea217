#include <iostream>
#include <string>
#include <vector>

#include "splitcycle/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return splitcycle::run(args, std::cout, std::cerr);
}
