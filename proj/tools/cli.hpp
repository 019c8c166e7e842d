#pragma once

#include <iosfwd>

namespace tourvote::cli {

/// Process exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kMismatch = 1,  ///< semantic failure: profile does not reproduce the tournament
  kUsage = 2,     ///< bad flags, unreadable or malformed input, label mismatch
  kRefused = 3,   ///< input above an exhaustive-search cap or budget
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tourvote::cli
