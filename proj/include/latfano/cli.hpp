// Command-line surface of the toolkit.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latfano {

/// Runs one CLI invocation (args excludes the program name) and writes to
/// the given streams. Returns the process exit code: 0 when the requested
/// check holds or output was produced, 1 when a check fails or a search
/// comes back empty-handed, 2 on usage, parse or precondition errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace latfano
