#include <iostream>

#include "stcalc/cli.hpp"

int main(int argc, char** argv) { return stcalc::cli::run(argc, argv, std::cout, std::cerr); }
