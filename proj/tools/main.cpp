#include <iostream>

#include "nig/cli.hpp"

int main(int argc, char** argv) { return nig::run(argc, argv, std::cin, std::cout, std::cerr); }
