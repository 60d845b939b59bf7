#include <iostream>

#include "quotcoh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quotcoh::run(args, std::cout, std::cerr);
}
