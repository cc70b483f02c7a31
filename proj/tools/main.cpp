#include <iostream>
#include <string>
#include <vector>

#include "taquin/cli.hpp"

int main(int argc, char** argv) {
  std::cout.setf(std::ios::unitbuf);
  std::vector<std::string> args(argv + 1, argv + argc);
  return taquin::cli::run(args, std::cout, std::cerr);
}
