#include <iostream>

#include "inducibility/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return inducibility::dispatch(args, std::cout, std::cerr);
}
