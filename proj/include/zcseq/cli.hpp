#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zcseq::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Runs one command line (args excludes the program name). Payload goes to
/// `out`, diagnostics to `err`. Returns 0, 1 or 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zcseq::cli
