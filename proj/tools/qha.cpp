#include <iostream>

#include "qha/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qha::cli::run(args, std::cout, std::cerr);
}
