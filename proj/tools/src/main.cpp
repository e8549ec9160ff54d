#include <iostream>

#include "fnls_cli/cli.hpp"

int main(int argc, char** argv) { return fnls::cli::run(argc, argv, std::cout, std::cerr); }
