#include <iostream>
#include <string>
#include <vector>

#include "phipsi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return phipsi::run_cli(args, std::cout, std::cerr);
}
