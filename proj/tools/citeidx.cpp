#include <iostream>

#include "citeidx/cli.hpp"

int main(int argc, char** argv) { return citeidx::cli::run(argc, argv, std::cout, std::cerr); }
