#include <iostream>

#include "qpw/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return qpw::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
