#include <iostream>

#include "monoclean/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monoclean::run_cli(args, std::cout, std::cerr);
}
