#include <iostream>

#include "binedge/cli.hpp"

int main(int argc, char** argv) { return binedge::run_cli(argc, argv, std::cout, std::cerr); }
