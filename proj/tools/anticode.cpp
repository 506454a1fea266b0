#include <iostream>

#include "anticode/cli.hpp"

int main(int argc, char** argv) { return anticode::run_cli(argc, argv, std::cout, std::cerr); }
