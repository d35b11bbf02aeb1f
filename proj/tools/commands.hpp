#pragma once

// Subcommands of the qabel tool: verify, poly, expand, lagrange, eval, list.

#include <string>
#include <vector>

#include "qabel/registry.hpp"

namespace qabel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  std::string out;
  std::string err;
  int code = kExitOk;
};

/// Runs one command line; args excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

/// {"entries": [...], "total", "passed", "failed"} with one object per
/// check, serialized with two-space indentation.
std::string json_report(const std::vector<CheckResult>& results);

std::string text_report(const std::vector<CheckResult>& results);

}  // namespace qabel::cli
