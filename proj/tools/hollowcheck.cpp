#include "hollowcheck/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hollowcheck::cli::main(argc, argv, std::cout, std::cerr); }
