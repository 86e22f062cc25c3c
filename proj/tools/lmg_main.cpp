#include <iostream>
#include <string>
#include <vector>

#include "lmgcli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lmgcli::run(args, std::cout, std::cerr);
}
