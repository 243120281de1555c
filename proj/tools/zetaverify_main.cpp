#include <iostream>
#include <vector>

#include "zetaverify/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zetaverify::cli::run(args, std::cout, std::cerr);
}
