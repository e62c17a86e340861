#pragma once

#include <string>
#include <vector>

// Command-line surface. run_command is the whole tool: the binary's main()
// forwards to it, and tests drive it in-process with the same argument
// vectors a shell would pass.
namespace conespan {

inline constexpr const char* kToolName = "conespan";
inline constexpr const char* kToolVersion = "1.0.0";

// Executes one invocation; args excludes the program name. Returns the
// process exit code: 0 success / all checks passed, 1 at least one check
// failed, 2 usage or input error.
int run_command(const std::vector<std::string>& args);

}  // namespace conespan
