#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) { return spectral::cli::dispatch(argc, argv, std::cout, std::cerr); }
