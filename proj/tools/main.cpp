#include <iostream>
#include <string>
#include <vector>

#include "monoidgeom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monoidgeom::cli::run(args, std::cout);
}
