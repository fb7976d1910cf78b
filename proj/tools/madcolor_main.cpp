#include <string>
#include <vector>

#include "madcolor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return madcolor::cli::run(args);
}
