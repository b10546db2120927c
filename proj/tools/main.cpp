#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return theta::cli::run(args, std::cout, std::cerr);
}
