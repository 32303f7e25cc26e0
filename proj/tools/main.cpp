#include <iostream>
#include <string>
#include <vector>

#include "setpat_cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return setpat::cli::run_command(args, std::cin, std::cout, std::cerr);
}
