#include <iostream>
#include <string>
#include <vector>

#include "mmalign/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mmalign::cli::main_entry(args, std::cout, std::cerr);
}
