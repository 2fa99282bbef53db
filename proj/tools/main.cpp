#include <iostream>
#include <string>
#include <vector>

#include "spinnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spinnet::cli::run(args, std::cout, std::cerr);
}
