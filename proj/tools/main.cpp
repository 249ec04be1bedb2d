#include <iostream>

#include "necollapse/cli.hpp"

int main(int argc, char** argv) { return nec::cli::run(argc, argv, std::cout, std::cerr); }
