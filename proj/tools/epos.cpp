#include <iostream>

#include "epos/cli.hpp"

int main(int argc, char** argv) { return epos::run(argc, argv, std::cout, std::cerr); }
