#include <iostream>

#include "pvm/cli.hpp"

int main(int argc, char** argv) { return pvm::cli::run(argc, argv, std::cout, std::cerr); }
