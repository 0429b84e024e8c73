#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boardmagic::cli {

// Stable exit codes, also documented in the README.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;           // bad arguments or unparseable input
inline constexpr int kImpossible = 2;      // proven impossible / nonexistent
inline constexpr int kNotCovered = 3;      // no known construction
inline constexpr int kInvalidDesign = 4;   // verification failed / not constant
inline constexpr int kBudgetExceeded = 5;  // search ran out of nodes or time
inline constexpr int kBoardTooLarge = 6;   // board over the search square cap
inline constexpr int kSweepMismatch = 7;   // sweep found a construction defect

/// Runs the command line given argv-style arguments (excluding the program
/// name). All output goes to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boardmagic::cli
