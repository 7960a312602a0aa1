#include <iostream>
#include <string>
#include <vector>

#include "cpcf/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cpcf::cli::run(args, std::cout, std::cerr);
}
