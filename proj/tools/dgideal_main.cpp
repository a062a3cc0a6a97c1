#include <iostream>
#include <vector>

#include "dgideal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dgideal::run_cli(args, std::cout, std::cerr);
}
