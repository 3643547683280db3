#include <iostream>

#include "subgrowth/cli.hpp"

int main(int argc, char** argv) { return subgrowth::cli::run(argc, argv, std::cout, std::cerr); }
