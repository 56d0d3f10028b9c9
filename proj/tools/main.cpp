#include "hyshift/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hyshift::cli::run(argc, argv, std::cout, std::cerr); }
