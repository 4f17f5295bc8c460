#include <iostream>
#include <string>
#include <vector>

#include "kashaev_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kashaev::cli::run(args, std::cout, std::cerr);
}
