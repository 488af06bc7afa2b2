#include <iostream>

#include "adgcolor/cli.hpp"

int main(int argc, char** argv) { return adgcolor::run_cli(argc, argv, std::cout, std::cerr); }
