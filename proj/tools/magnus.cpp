#include <iostream>

#include "magnus/cli.hpp"

int main(int argc, char** argv) {
  return magnus::run_cli(argc, argv, std::cout, std::cerr);
}
