#include <iostream>

#include "ocdc/cli.hpp"

int main(int argc, char** argv) {
  return ocdc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
