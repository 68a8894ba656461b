#include <iostream>
#include <string>
#include <vector>

#include "semibrace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semibrace::run_cli(args, std::cout, std::cerr);
}
