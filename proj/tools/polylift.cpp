#include <iostream>

#include "polylift/cli.hpp"

int main(int argc, char** argv) {
  return polylift::cli::run(argc, argv, std::cout, std::cerr);
}
