#include <iostream>

#include "pfu/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pfu::cli::run(args, std::cout, std::cerr);
}
