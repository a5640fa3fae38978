#include "weylhodge/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return weylhodge::cli::run(argc, argv, std::cout, std::cerr);
}
