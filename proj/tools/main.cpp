#include <iostream>

#include "sbsramsey/cli.hpp"

int main(int argc, char** argv) {
  return sbsramsey::cli::main_entry(argc, argv, std::cout, std::cerr);
}
