#include "kissing/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return kissing::cli::main(argc, argv, std::cout, std::cerr); }
