#include "torusphase/cli/run.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return torusphase::cli::run(argc, argv, std::cout, std::cerr);
}
