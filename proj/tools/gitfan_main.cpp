#include <iostream>
#include <string>
#include <vector>

#include "gitfan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gitfan::cli::run(args, std::cout);
}
