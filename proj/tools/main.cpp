#include <iostream>
#include <string>
#include <vector>

#include "mapcensus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = mapcensus::run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
