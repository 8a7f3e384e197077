#include <iostream>

#include "zsdelta/cli.hpp"

int main(int argc, char** argv) {
  return zsdelta::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
