#include <iostream>

#include "mellin/cli.hpp"

int main(int argc, char** argv) { return mellin::cli::cli_main(argc, argv, std::cout, std::cerr); }
