#include <iostream>
#include <string>
#include <vector>

#include "msidon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return msidon::cli::dispatch(args, std::cout, std::cerr);
}
