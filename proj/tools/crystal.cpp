#include <iostream>
#include <string>
#include <vector>

#include "crystal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = crystal::cli::execute(args);
  (result.exit_code == crystal::cli::exit_ok ? std::cout : std::cerr) << result.output;
  return result.exit_code;
}
