#include <iostream>
#include <string>
#include <vector>

#include "spectral_kit/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return spectral_kit::run_cli(args, std::cin, std::cout, std::cerr);
}
