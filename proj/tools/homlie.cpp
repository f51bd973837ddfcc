#include <iostream>
#include <string>
#include <vector>

#include "homlie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return homlie::cli::run(args, std::cout, std::cerr);
}
