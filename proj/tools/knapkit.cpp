#include <iostream>
#include <string>
#include <vector>

#include "knapkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knapkit::run_cli(args, std::cout, std::cerr);
}
