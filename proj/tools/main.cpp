#include <iostream>
#include <string>
#include <vector>

#include "boardmagic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return boardmagic::cli::run(args, std::cout, std::cerr);
}
