#include <iostream>
#include <string>
#include <vector>

#include "hypersdf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hypersdf::run_command(args, std::cout, std::cerr);
}
