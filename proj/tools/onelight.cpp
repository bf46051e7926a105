#include <iostream>
#include <string>
#include <vector>

#include "onelight/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return onelight::run_cli(args, std::cout, std::cerr);
}
