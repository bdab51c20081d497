#include <iostream>
#include <string>
#include <vector>

#include "wheels/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wheels::run_cli(std::move(args), std::cout, std::cerr);
}
