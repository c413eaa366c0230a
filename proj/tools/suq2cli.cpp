#include <iostream>

#include "suq2/cli.hpp"

int main(int argc, char** argv) { return suq2::cli::main(argc, argv, std::cout, std::cerr); }
