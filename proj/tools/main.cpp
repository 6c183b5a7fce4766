#include <iostream>

#include "nqg/cli.hpp"

int main(int argc, char** argv) {
  return nqg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
