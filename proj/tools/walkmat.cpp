#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::cout << std::unitbuf;
  return walkmat::cli::run(argc, argv, {std::cin, std::cout, std::cerr});
}
