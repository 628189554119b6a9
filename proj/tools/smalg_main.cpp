#include <iostream>
#include <string>
#include <vector>

#include "smalg/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return smalg::run_command(args, std::cout, std::cerr);
}
