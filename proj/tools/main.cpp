#include <iostream>

#include "chargelab/cli.hpp"

int main(int argc, char** argv) { return chargelab::run_cli(argc, argv, std::cout, std::cerr); }
