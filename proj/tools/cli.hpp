#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dptree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitVerification = 3;

// Runs one command line (without the program name). Everything the command
// prints goes to `out` and `err`, which keeps the commands testable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// SHA-256 of a file as lowercase hex.
std::string file_sha256(const std::string& path);

}  // namespace dptree::cli
