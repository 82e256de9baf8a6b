#include <iostream>

#include "qtsp/cli.hpp"

int main(int argc, char** argv) { return qtsp::run_cli(argc, argv, std::cout, std::cerr); }
