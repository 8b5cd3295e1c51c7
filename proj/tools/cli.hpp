#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "eulerg/error.hpp"
#include "eulerg/verify.hpp"

namespace eulerg::cli {

/// Exit statuses of the eulerg tool.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kNumerical = 3,
  kInvalidParams = 4,
};

/// Status reported for a library error of the given kind.
int exit_code_for(ErrorKind kind);

/// Status of a finished verification run: kOk iff every check passed.
int verify_exit_code(const VerifyOutcome& outcome);

/// Runs the tool on `args` (without the program name). Data goes to `out`,
/// diagnostics to `err`; the return value is the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerg::cli
