#include <iostream>

#include "convexlab/cli.hpp"

int main(int argc, char** argv) { return convexlab::cli_main(argc, argv, std::cout, std::cerr); }
