#include <iostream>
#include <string>
#include <vector>

#include "ufmvt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ufmvt::run(args, std::cout, std::cerr);
}
