#include <iostream>
#include <string>
#include <vector>

#include "cwc/cli.hpp"

int main(int argc, char** argv) {
  return cwc::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
