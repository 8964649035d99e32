#include <iostream>
#include <string>
#include <vector>

#include "sphsys/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sphsys::cli::run(args, std::cin, std::cout, std::cerr);
}
