#pragma once

#include <iosfwd>

namespace epg::cli {

enum ExitCode { Ok = 0, ComputationError = 1, UsageError = 2, VerifyMismatch = 3 };

/// Runs the `epg` command line. Artifacts go to `out` (or the --out file),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace epg::cli
