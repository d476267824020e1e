#include <iostream>

#include "nullwrithe/cli.hpp"

int main(int argc, char** argv) {
  return nullwrithe::cli::run_cli(argc, argv, std::cout, std::cerr);
}
