#pragma once
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace vcne::cli {

/// Exit codes: 0 success, 1 runtime or data error, 2 usage error.
enum ExitCode : int { kOk = 0, kRuntimeError = 1, kUsageError = 2 };

/**
 * Entry point of the `vcne` tool. args excludes the program name. Output
 * (metrics, bench tables) goes to out; diagnostics and the resolved config
 * go to err.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

/// `key = value` lines; `#` starts a comment.
std::map<std::string, std::string> parse_config(std::istream& in, const std::string& source = "<config>");

}  // namespace vcne::cli
