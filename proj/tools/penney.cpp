#include <iostream>

#include "penney/cli/commands.hpp"

int main(int argc, char** argv) { return penney::cli::run(argc, argv, std::cout, std::cerr); }
