#include <iostream>
#include <string>
#include <vector>

#include "soclelab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return soclelab::cli::run(args, std::cout, std::cerr);
}
