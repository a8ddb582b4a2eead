#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = ciobs::cli::run(args);
  (result.exit_code == 0 ? std::cout : std::cerr) << result.log;
  return result.exit_code;
}
