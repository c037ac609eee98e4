#include <iostream>

#include "ranslice/cli.hpp"

int main(int argc, char** argv) { return ranslice::run_cli(argc, argv, std::cout, std::cerr); }
