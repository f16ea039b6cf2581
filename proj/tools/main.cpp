#include <iostream>

#include "liealg/cli.hpp"

int main(int argc, char** argv) {
  return liealg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
