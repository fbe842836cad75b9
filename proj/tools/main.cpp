#include "oa/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return oa::run_cli(argc, argv, std::cout, std::cerr); }
