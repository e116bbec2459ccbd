#include <iostream>
#include <string>
#include <vector>

#include "radio/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return radio::run(args, std::cout, std::cerr, std::cin);
}
