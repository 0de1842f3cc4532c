#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) { return ein2::cli::run(argc, argv, std::cout, std::cerr); }
