#include <iostream>

#include "sldrep/cli.hpp"

int main(int argc, char** argv) {
  return sldrep::cli::run(argc, argv, std::cout, std::cerr);
}
