#include <iostream>

#include "efrac/cli.hpp"

int main(int argc, char** argv) { return efrac::cli::run(argc, argv, std::cout, std::cerr); }
