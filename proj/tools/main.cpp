#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return affkl::cli::run(argc, argv, std::cout, std::cerr); }
