#include <iostream>
#include <string>
#include <vector>

#include "vss/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return vss::cli::run(args, std::cout, std::cerr);
}
