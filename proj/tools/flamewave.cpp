#include <iostream>

#include "flamewave/cli.hpp"

int main(int argc, char** argv) {
  return flamewave::cli::main_entry(argc, argv, std::cout, std::cerr);
}
