#pragma once

#include <iosfwd>

namespace csm::cli {

/// Process exit codes, stable across releases.
enum ExitStatus : int {
  kSuccess = 0,
  kRejected = 1,
  kInvalidModel = 2,
  kParseError = 3,
  kUsageOrIo = 4,
};

/// Entry point of `csmc`, with injectable streams for testing.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace csm::cli
