#pragma once

#include <string>
#include <vector>

#include "hullkit/document.hpp"

namespace hullkit {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitPrecondition = 4,
};

/// Human-readable text and a JSON document with sorted keys; identical input
/// gives byte-identical output.
struct CommandResult {
  int exit_code = kExitOk;
  std::string text;
  std::string structured;
};

const std::vector<std::string>& command_names();

/// One of command_names(). Validation and precondition failures are reported
/// in the result; only InternalError escapes.
CommandResult run(const std::string& command, const InputDocument& doc);

/// Result for input that failed to parse.
CommandResult parse_failure(const std::string& command, const std::string& message);

}  // namespace hullkit
