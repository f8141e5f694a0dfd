#include <vector>

#include "ptm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ptm::cli::run(std::move(args));
}
