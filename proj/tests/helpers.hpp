#pragma once

// Shared test utilities: temp workspaces, spawning the CLI binary, and small
// file helpers.  Everything is POSIX-only, matching the CI environment.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace testutil {

// Unique per-process scratch directory, created on first use.
inline const std::filesystem::path& scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("secrecy-lab-tests-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

inline std::filesystem::path scratch_file(const std::string& name) {
  return scratch_dir() / name;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  out << s;
}

// Path of the command-line binary under test: environment override first,
// then the build-time location baked in by CMake.
inline std::string cli_binary() {
  if (const char* env = std::getenv("SECRECY_LAB_BIN")) return env;
#ifdef SECRECY_LAB_BIN_PATH
  return SECRECY_LAB_BIN_PATH;
#else
  return "secrecy-lab";
#endif
}

struct CliResult {
  int exit_code = -1;
  std::string output;  // combined stdout+stderr
};

// Runs `<env_prefix> <binary> <args>` through the shell, capturing combined
// output.  `env_prefix` is for variable assignments like "FOO=1".
inline CliResult run_cli(const std::string& args,
                         const std::string& env_prefix = "") {
  static int counter = 0;
  const auto capture =
      scratch_file("cli-capture-" + std::to_string(counter++) + ".txt");
  std::string cmd;
  if (!env_prefix.empty()) cmd += env_prefix + " ";
  cmd += "'" + cli_binary() + "' " + args + " > '" + capture.string() +
         "' 2>&1";
  const int rc = std::system(cmd.c_str());
  CliResult out;
  if (rc == -1)
    out.exit_code = -1;
  else if (WIFEXITED(rc))
    out.exit_code = WEXITSTATUS(rc);
  out.output = read_file(capture);
  std::filesystem::remove(capture);
  return out;
}

}  // namespace testutil
