#include <iostream>

#include "rho/cli.hpp"

int main(int argc, char** argv) { return rho::run_cli(argc, argv, std::cout, std::cerr); }
