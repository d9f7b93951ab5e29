#include <iostream>

#include "mwist/cli.hpp"

int main(int argc, char** argv) {
  return mwist::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
