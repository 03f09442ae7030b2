#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arithmaps {

// The whole command-line front end, callable in-process (the golden-file
// tests drive it without spawning). args excludes the program name.
// Exit codes: 0 success, 2 validation error, 3 runtime mathematical error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arithmaps
