#pragma once

#include <string>
#include <vector>

namespace balcov::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

/// Run the command-line tool with the given arguments, capturing both
/// streams and the exit code.
CliResult run_cli(const std::vector<std::string>& args);

/// Write content to a fresh file under a per-process temp directory and
/// return its path.
std::string write_temp(const std::string& stem, const std::string& content);

} // namespace balcov::testing
