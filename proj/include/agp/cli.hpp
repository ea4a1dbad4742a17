#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agp::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kInternalError = 3;

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agp::cli
