#include <iostream>

#include "sigma_braid/cli.hpp"

int main(int argc, char** argv) { return sbraid::run_cli(argc, argv, std::cout, std::cerr); }
