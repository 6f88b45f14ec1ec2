#include <iostream>

#include "semitoric/cli.hpp"

int main(int argc, char** argv) {
    return semitoric::cli::run(argc, argv, std::cout, std::cerr);
}
