#include <iostream>

#include "superroot/cli.hpp"

int main(int argc, char** argv) { return superroot::cli::run(argc, argv, std::cout, std::cerr); }
