#include <cstdlib>
#include <iostream>

#include "ellgal_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> seed;
  if (const char* s = std::getenv(ellgal::cli::kSeedEnvVar)) seed = s;
  return ellgal::cli::run(args, std::cout, std::cerr, seed);
}
