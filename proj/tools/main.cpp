#include <iostream>

#include "dilute/cli.hpp"

int main(int argc, char** argv) { return dilute::run_cli(argc, argv, std::cout, std::cerr); }
