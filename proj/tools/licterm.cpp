#include <iostream>

#include "licterm/cli.hpp"

int main(int argc, char** argv) { return licterm::run_cli(argc, argv, std::cout, std::cerr); }
