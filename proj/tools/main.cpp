#include <iostream>
#include <string>
#include <vector>

#include "sigma8/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sigma8::run(args, std::cout, std::cerr);
}
