#include <iostream>

#include "mdslab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mdslab::cli::run(args, std::cout);
}
