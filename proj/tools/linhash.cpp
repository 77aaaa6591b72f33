#include <iostream>
#include <string>
#include <vector>

#include "linhash/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return linhash::cli_run(args, std::cout, std::cerr);
}
