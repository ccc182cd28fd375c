#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infl::cli {

enum ExitCode : int { kSuccess = 0, kNumericalFailure = 1, kInputFailure = 2 };

/**
 * Entry point shared by the `inflfit` binary and the tests.
 *
 * `args` excludes the program name. The JSON report goes to `out` and, with
 * the plot-data CSVs, into --out-dir once every computation has succeeded;
 * diagnostics go to `err`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

[[nodiscard]] std::string sha256_file(const std::string& path);

}  // namespace infl::cli
