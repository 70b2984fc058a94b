#include <iostream>
#include <string>
#include <vector>

#include "revlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return revlab::run_cli(args, std::cout, std::cerr);
}
