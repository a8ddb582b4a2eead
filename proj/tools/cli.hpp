#pragma once

#include <string>
#include <vector>

namespace ciobs::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, input_error = 2, exhausted = 3 };

struct CommandResult {
  int exit_code = ok;
  std::vector<std::string> artifacts;  // files written
  std::string log;
};

/// Runs one command; args exclude the program name, e.g. {"gb", "ideal.json"}.
CommandResult run(const std::vector<std::string>& args);

}  // namespace ciobs::cli
