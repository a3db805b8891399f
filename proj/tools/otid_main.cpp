#include <iostream>
#include <string>
#include <vector>

#include "otid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return otid::run_cli(args, std::cout, std::cerr);
}
