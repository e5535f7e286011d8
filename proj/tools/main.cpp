#include <iostream>

#include "necklace/cli.hpp"

int main(int argc, char** argv) {
  return necklace::cli::run(argc, argv, std::cout, std::cerr);
}
