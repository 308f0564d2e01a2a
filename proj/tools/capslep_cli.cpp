#include <iostream>
#include <string>
#include <vector>

#include "capslep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return capslep::cli::run_cli(args, std::cout, std::cerr);
}
