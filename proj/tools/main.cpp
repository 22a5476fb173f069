#include <iostream>

#include "paramod/cli.hpp"

int main(int argc, char** argv) {
  return paramod::run_cli(argc, argv, std::cout, std::cerr);
}
