#ifndef RDW_TOOLS_CLI_HPP
#define RDW_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rdw::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kCapacity = 3, kCheck = 4, kInternal = 1 };

inline constexpr const char* kVersion = "0.1.0";

/// Runs one `rdw` invocation. args[0] is the program name. Errors are written
/// to `err` as a single line `error:<kind>: <message>`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdw::cli

#endif  // RDW_TOOLS_CLI_HPP
