#include <iostream>
#include <string>
#include <vector>

#include "rcorona/cli.hpp"

int main(int argc, char** argv) {
  return rcorona::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
