#include <iostream>
#include <string>
#include <vector>

#include "relmon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return relmon::cli_main(std::move(args), std::cout, std::cerr);
}
