#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace insenc {

// Run the command-line tool in-process. args excludes the program name.
// Returns the exit code: 0 success, 1 domain error, 2 usage error.
// Results go to out (JSON by default, aligned text with --pretty),
// errors to err.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace insenc
