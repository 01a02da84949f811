#include <iostream>
#include <string>
#include <vector>

#include "e5proof/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return e5proof::cli::run(args, std::cout, std::cerr);
}
