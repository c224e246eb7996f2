#include <iostream>

#include "swelab_cli/cli.hpp"

int main(int argc, char** argv) { return swelab::cli::run_cli(argc, argv, std::cout, std::cerr); }
