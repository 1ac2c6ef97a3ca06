#include <iostream>
#include <string>
#include <vector>

#include "ridgecalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ridgecalc::run_cli(args, std::cout, std::cerr);
}
