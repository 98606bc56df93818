#include <iostream>

#include "rgd/cli/app.hpp"

int main(int argc, char** argv) {
  return rgd::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
