#include <iostream>

#include "polyapprox_cli/cli.hpp"

int main(int argc, char** argv) {
  return polyapprox::cli::run(argc, argv, std::cout, std::cerr);
}
