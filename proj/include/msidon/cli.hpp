#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msidon::cli {

inline constexpr const char* kReportSchema = "msidon/run-report/v1";

enum ExitCode : int { kOk = 0, kVerifiedFalse = 1, kUsage = 2 };

/// Runs one subcommand; `args` excludes the program name. The run report
/// goes to `out` unless --out names a file.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msidon::cli
