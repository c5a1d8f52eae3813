#include <iostream>
#include <string>
#include <vector>

#include "turaev/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const turaev::CliResult res = turaev::run_cli(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
