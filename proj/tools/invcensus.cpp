#include <iostream>
#include <string>
#include <vector>

#include "invcensus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return invcensus::run_cli(args, std::cout, std::cerr);
}
