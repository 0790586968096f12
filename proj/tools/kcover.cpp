#include <iostream>
#include <string>
#include <vector>

#include "kcover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return kcover::cli::run(args, std::cout, std::cerr);
}
