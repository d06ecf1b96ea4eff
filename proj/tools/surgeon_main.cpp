#include <iostream>

#include "surgeon/cli.hpp"

int main(int argc, char** argv) {
  return surgeon::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
