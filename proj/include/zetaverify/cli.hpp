#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetaverify::cli {

/// Runs one CLI invocation (argv without the program name). Writes the
/// envelope JSON or the derived human-readable text to `out`. Exit codes:
/// 0 all checks passed, 1 mathematical mismatch, 2 quadrature / diagnostics
/// failure, 64 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The "report" subtree of the last envelope produced by run() in this
/// thread, serialized; used for determinism comparisons.
const std::string& last_report_json();

}  // namespace zetaverify::cli
