#include <iostream>

#include "cht/cli.hpp"

int main(int argc, char** argv) {
  return cht::run_cli(argc, argv, std::cout, std::cerr);
}
