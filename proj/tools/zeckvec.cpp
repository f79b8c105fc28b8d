#include <iostream>

#include "zeckvec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zeckvec::cli::run(args, std::cout, std::cerr);
}
