#include <iostream>

#include "infoparity/cli.h"

int main(int argc, char** argv) {
  return infoparity::cli::Main(argc, argv, std::cout, std::cerr);
}
