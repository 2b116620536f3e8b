#include <iostream>
#include <string>
#include <vector>

#include "tiltkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tiltkit::cli::dispatch(args, std::cout);
}
