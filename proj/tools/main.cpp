#include <iostream>
#include <string>
#include <vector>

#include "sumgap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sumgap::cli::run(args, std::cout, std::cerr);
}
