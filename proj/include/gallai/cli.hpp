#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gallai {

// Full command-line entry point. args excludes the program name. Returns the
// process exit code: 0 success (all answers true for recognize, no mismatches
// for crosscheck), 1 for false answers / mismatches, 2 on any error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace gallai
