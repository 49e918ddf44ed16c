#pragma once

#include <string>
#include <vector>

namespace extiso::cli {

// In-process entry point behind the extiso binary, also driven directly by
// tests. args are the command-line arguments without the program name.
// output is exactly what the command prints; with --json that is one report
// object (sorted keys) plus a trailing newline.
//
// Exit codes: 0 isomorphic / success, 1 not isomorphic, 2 resource limit,
// 64 usage or input error.
struct CliResult {
  int exit_code = 0;
  std::string output;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace extiso::cli
