#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sombor::cli {

// The whole command-line surface, callable in process. args excludes the
// program name. Returns the exit code: 0 on success, 1 when a verification
// check fails, 2 on a usage error (one-line diagnostic on err).
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace sombor::cli
