#include <iostream>

#include "pmsp/cli.hpp"

int main(int argc, char** argv) {
  return pmsp::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
