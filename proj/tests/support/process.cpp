#include "support/process.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <sys/wait.h>

namespace balcov::testing {

namespace {

const std::filesystem::path& temp_dir() {
  static const std::filesystem::path dir = [] {
    std::string tmpl =
        (std::filesystem::temp_directory_path() / "balcov-tests-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    return std::filesystem::path(tmpl);
  }();
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  static int counter = 0;
  const std::filesystem::path out_path = temp_dir() / ("out" + std::to_string(counter));
  const std::filesystem::path err_path = temp_dir() / ("err" + std::to_string(counter));
  ++counter;

  std::string command = shell_quote(BALCOV_CLI_PATH);
  for (const std::string& arg : args) command += " " + shell_quote(arg);
  command += " >" + shell_quote(out_path.string());
  command += " 2>" + shell_quote(err_path.string());

  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

std::string write_temp(const std::string& stem, const std::string& content) {
  static int counter = 0;
  const std::filesystem::path path =
      temp_dir() / (stem + "-" + std::to_string(counter++) + ".json");
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

} // namespace balcov::testing
