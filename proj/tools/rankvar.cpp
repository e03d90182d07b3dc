#include <iostream>

#include "rankvar/cli.hpp"

int main(int argc, char** argv) { return rankvar::cli::run(argc, argv, std::cout, std::cerr); }
