#include <iostream>

#include "thyp/cli.hpp"

int main(int argc, char** argv) { return thyp::run_cli(argc, argv, std::cout, std::cerr); }
