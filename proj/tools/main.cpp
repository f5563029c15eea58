#include <iostream>

#include "quantinv/cli.hpp"

int main(int argc, char** argv) {
  return quantinv::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
