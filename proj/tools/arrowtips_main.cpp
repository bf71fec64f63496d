#include <iostream>

#include "arrowtips/cli.hpp"

int main(int argc, char** argv) { return arrowtips::cli::run(argc, argv, std::cout, std::cerr); }
