#include <iostream>
#include <string>
#include <vector>

#include "hypersimp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hypersimp::cli::run(args, std::cout, std::cerr);
}
