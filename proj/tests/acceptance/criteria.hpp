#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace surgeon::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs the command-line tool in-process with the given arguments and
// captures stdout. Returns the exit code.
using CliRunner = std::function<int(const std::vector<std::string>& args, std::string& out)>;

struct Options {
  CliRunner cli;
  std::uint64_t seed = 0x5eed2024;
  std::filesystem::path scratch;  // writable directory for cache round trips
};

std::vector<CriterionResult> run_all(const Options& options);

// "PASS  3  slope claim ... (detail)"
std::string format_line(const CriterionResult& r);

}  // namespace surgeon::acceptance
