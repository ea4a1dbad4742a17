#include <iostream>
#include <string>
#include <vector>

#include "agp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return agp::cli::run(args, std::cout, std::cerr);
}
