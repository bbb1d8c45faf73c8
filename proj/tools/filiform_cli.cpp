#include <string>
#include <vector>

#include "filiform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return filiform::cli::run(args);
}
