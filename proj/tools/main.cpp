#include <iostream>
#include <string>
#include <vector>

#include "braidcode/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return braidcode::run_cli(std::move(args), std::cout, std::cerr);
}
