#include <iostream>

#include "kpoisson/cli/commands.hpp"

int main(int argc, char** argv) {
    return kpoisson::cli::run_cli(argc, argv, std::cout, std::cerr);
}
