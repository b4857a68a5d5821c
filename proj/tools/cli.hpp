#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planelog::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;  // property false, or unsat within the bound
inline constexpr int kBadInput = 2;

// Runs one command line (without the program name). JSON goes to `out`, a
// short human summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planelog::cli
