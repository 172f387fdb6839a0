#pragma once

#include <iosfwd>

namespace chargelab {

// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kValidation = 1, kVerificationFailed = 2, kInternal = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chargelab
