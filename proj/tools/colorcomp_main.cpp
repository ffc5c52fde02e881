#include <iostream>

#include "colorcomp/cli.hpp"

int main(int argc, char** argv) {
  return colorcomp::run_cli(argc, argv, std::cout, std::cerr);
}
