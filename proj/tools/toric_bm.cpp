#include <iostream>
#include <string>
#include <vector>

#include "toric_bm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return toric_bm::cli::run_cli(args, std::cout, std::cerr);
}
