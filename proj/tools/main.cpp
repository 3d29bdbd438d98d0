#include <iostream>

#include "pathpairs/cli.hpp"

int main(int argc, char** argv) {
  return pathpairs::cli::run(argc, argv, std::cout, std::cerr);
}
