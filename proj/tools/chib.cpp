#include <iostream>

#include "chib/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chib::run_cli(args, std::cout, std::cerr);
}
