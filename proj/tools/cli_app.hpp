#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specgeo::cli {

/// Run the command-line front end on the given arguments (without argv[0]).
/// Writes the payload to `out` (or the --output path) and diagnostics to
/// `err`. Exit codes: 0 success and all checks pass, 2 a mathematical check
/// failed, 1 usage or runtime error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace specgeo::cli
