#pragma once

#include <iosfwd>

namespace cg {

/// Exit codes of the cg tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitScale = 3,
  kExitIo = 4,
};

/// Entry point of the cg tool, with injectable streams for testing.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cg
