#include <iostream>
#include <string>
#include <vector>

#include "dgms/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dgms::run_cli(args, std::cin, std::cout, std::cerr);
}
