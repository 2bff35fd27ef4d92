#include <iostream>
#include <vector>

#include "cubiq/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return cubiq::cli::run(args, std::cout, std::cerr);
}
