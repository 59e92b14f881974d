#include <iostream>
#include <string>
#include <vector>

#include "fyperm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fyperm::cli::run(args, std::cout, std::cerr);
}
