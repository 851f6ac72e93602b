#include <iostream>
#include <vector>

#include "ramur/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ramur::cli::run(std::move(args), std::cout, std::cerr);
}
