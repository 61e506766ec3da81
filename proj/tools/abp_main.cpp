#include <iostream>
#include <vector>

#include "abp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return abp::run_cli(args, std::cout, std::cerr);
}
