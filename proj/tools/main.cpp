#include <iostream>

#include "kgbound/cli.hpp"

int main(int argc, char** argv) {
    return kg::cli::run(argc, argv, std::cout, std::cerr);
}
