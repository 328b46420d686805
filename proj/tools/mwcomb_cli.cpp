#include <iostream>

#include "mwcomb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = mwcomb::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
