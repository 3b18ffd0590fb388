#pragma once

#include <iosfwd>

namespace ratkit {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;           // success, or equivalent
inline constexpr int kExitDifferent = 1;    // decided not equivalent
inline constexpr int kExitError = 2;        // usage or input error
inline constexpr int kExitSampled = 3;      // equal on every sampled word only

// Runs one command; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ratkit
