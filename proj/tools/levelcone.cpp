#include <iostream>
#include <string>
#include <vector>

#include "levelcone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return levelcone::dispatch(args, std::cout, std::cerr);
}
