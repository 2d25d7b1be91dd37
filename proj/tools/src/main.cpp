#include <iostream>
#include <string>
#include <vector>

#include "zeta_forge_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zeta_forge::cli::main_entry(args, std::cout, std::cerr);
}
