#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptk::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

enum ExitCode { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line; args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptk::cli
