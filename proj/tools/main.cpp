#include <iostream>
#include <string>
#include <vector>

#include "annulus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return annulus::cli::run(args, std::cout, std::cerr);
}
