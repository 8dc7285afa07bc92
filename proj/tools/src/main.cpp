#include <iostream>
#include <string>
#include <vector>

#include "loewner_lab/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return loewner::lab::run(args, std::cout, std::cerr);
}
