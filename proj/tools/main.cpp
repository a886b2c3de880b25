#include <iostream>
#include <string>
#include <vector>

#include "dirichlet_rkhs/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dirichlet_rkhs::cli::run(args, std::cout, std::cerr);
}
