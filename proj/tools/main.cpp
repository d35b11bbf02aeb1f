#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = qabel::cli::run_command(args);
  std::cout << result.out << std::flush;
  std::cerr << result.err << std::flush;
  return result.code;
}
