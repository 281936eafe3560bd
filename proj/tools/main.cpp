#include <iostream>

#include "sip/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sip::cli::run(args, std::cout, std::cerr);
}
