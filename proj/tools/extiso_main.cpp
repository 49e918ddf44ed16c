#include <cstdio>
#include <string>
#include <vector>

#include "extiso/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  extiso::cli::CliResult r = extiso::cli::run_cli(args);
  std::fputs(r.output.c_str(), stdout);
  return r.exit_code;
}
