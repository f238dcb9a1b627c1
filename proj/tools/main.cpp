#include <string>
#include <vector>

#include "accut/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return accut::run_cli(args);
}
