#include <iostream>

#include "axlarena/cli.hpp"

int main(int argc, char** argv) {
  return axl::cli_main(argc, argv, std::cout, std::cerr);
}
