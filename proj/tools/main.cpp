#include <iostream>
#include <string>
#include <vector>

#include "solvclass/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return solvclass::run_cli(args, std::cout, std::cerr);
}
