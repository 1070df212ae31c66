#include <iostream>

#include "kvec_cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return kvec::cli::run(argc, argv, std::cout, std::cerr);
}
