#include <iostream>

#include "weylflag/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return weylflag::run_cli(args, std::cout, std::cerr);
}
