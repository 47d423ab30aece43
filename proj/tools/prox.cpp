#include <iostream>

#include "prox/cli.hpp"

int main(int argc, char** argv) {
    return prox::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
