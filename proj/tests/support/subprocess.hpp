#pragma once

// Minimal subprocess runner for exercising the CLI binary from tests.
// POSIX-only (std::system + sh quoting), which matches the CI environment.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

namespace subprocess {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string shell_quote(const std::string& arg) {
  std::string quoted = "'";
  for (char c : arg) {
    if (c == '\'')
      quoted += "'\\''";
    else
      quoted += c;
  }
  quoted += "'";
  return quoted;
}

inline std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs the command, captures stdout/stderr separately, returns the exit
// code (or -1 when the child did not exit normally).
inline RunResult run(const std::vector<std::string>& argv) {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  const std::string tag =
      std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const auto out_path = dir / ("cli_out_" + tag);
  const auto err_path = dir / ("cli_err_" + tag);

  std::string command;
  for (const std::string& arg : argv) {
    if (!command.empty()) command += ' ';
    command += shell_quote(arg);
  }
  command += " > " + shell_quote(out_path.string());
  command += " 2> " + shell_quote(err_path.string());

  const int status = std::system(command.c_str());
  RunResult result;
  result.out = read_all(out_path);
  result.err = read_all(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  if (status != -1 && WIFEXITED(status))
    result.exit_code = WEXITSTATUS(status);
  return result;
}

// Unique scratch directory, removed recursively on destruction.
class TempDir {
public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("ringloss_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

private:
  std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace subprocess
