#include <iostream>

#include "atsplit/run_config.hpp"

int main(int argc, char** argv) { return atsplit::run_cli(argc, argv, std::cout, std::cerr); }
