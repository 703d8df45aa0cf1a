#include <iostream>

#include "qalg/cli.hpp"

int main(int argc, char** argv) { return qalg::run_cli(argc, argv, std::cout, std::cerr); }
