#include <iostream>

#include "minpoly/cli.hpp"

int main(int argc, char** argv) { return minpoly::cli::run(argc, argv, std::cout, std::cerr); }
