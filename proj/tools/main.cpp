#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return simplex_cover::cli::run(argc, argv, std::cout, std::cerr);
}
