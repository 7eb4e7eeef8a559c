#include <iostream>

#include "hnum/cli.hpp"

int main(int argc, char** argv) { return hnum::run_cli(argc, argv, std::cout, std::cerr); }
