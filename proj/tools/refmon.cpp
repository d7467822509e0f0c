#include <iostream>

#include "refmon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return refmon::runCli(args, std::cout, std::cerr);
}
