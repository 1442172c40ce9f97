#include <iostream>
#include <string>
#include <vector>

#include "hypsum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hypsum::cli::run(args, std::cout, std::cerr);
}
