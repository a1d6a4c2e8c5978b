#include <iostream>

#include "ladderne/cli.hpp"

int main(int argc, char** argv) { return ladderne::cli::run(argc, argv, std::cout, std::cerr); }
