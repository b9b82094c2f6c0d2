/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HUME_TESTS_CLI_RUNNER_HPP
#define HUME_TESTS_CLI_RUNNER_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Runs the real CLI binary (path in $HUME_CLI, exported by ctest) and
// captures exit code, stdout and stderr.

namespace support {

struct CliOutcome {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline const std::string& cli_path() {
  static const std::string path = [] {
    const char* env = std::getenv("HUME_CLI");
    return env ? std::string(env) : std::string();
  }();
  return path;
}

inline std::filesystem::path test_scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("hume-tests-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string write_temp_file(const std::string& stem,
                                   const std::string& content) {
  static std::atomic<unsigned> counter{0};
  auto path =
      test_scratch_dir() / (stem + "-" + std::to_string(counter++) + ".hume");
  std::ofstream file(path);
  file << content;
  return path.string();
}

inline std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

inline CliOutcome run_cli(const std::string& args,
                          const std::string& stdin_content = "") {
  if (cli_path().empty()) {
    return {-1, "", "HUME_CLI is not set; run through ctest"};
  }
  std::string in = write_temp_file("stdin", stdin_content);
  std::string out = write_temp_file("stdout", "");
  std::string err = write_temp_file("stderr", "");
  std::string command = "'" + cli_path() + "' " + args + " < '" + in +
                        "' > '" + out + "' 2> '" + err + "'";
  int rc = std::system(command.c_str());
  CliOutcome outcome;
  outcome.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  outcome.out = read_file(out);
  outcome.err = read_file(err);
  return outcome;
}

}  // namespace support

#endif  // HUME_TESTS_CLI_RUNNER_HPP
