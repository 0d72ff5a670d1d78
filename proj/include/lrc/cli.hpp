#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFindings = 2 };

/// Entry point of the `lrc` tool. `args` excludes the program name.
/// Returns kOk, kUsage (bad flags, unreadable input) or kFindings (a scan or
/// report with Mismatch/Uncovered rows, or lemma discrepancies).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrc::cli
