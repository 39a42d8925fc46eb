#include <iostream>
#include <string>
#include <vector>

#include "arity_asp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return arity_asp::cli::run(args, std::cout, std::cerr);
}
