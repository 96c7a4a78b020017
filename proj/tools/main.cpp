#include "shb/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return shb::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
