#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agdec::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;      // unverified decode under --verify, simulation failures
inline constexpr int kUsage = 2;       // bad arguments, vectors or curve-data files
inline constexpr int kViolation = 3;   // decoder invariant violated

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace agdec::cli
