#include <iostream>
#include <string>
#include <vector>

#include "uarep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return uarep::run_cli(args, std::cout);
}
