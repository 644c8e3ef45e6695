#include <vector>

#include "siltlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return siltlab::cli_main(std::move(args));
}
