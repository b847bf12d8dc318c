#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace termkit::cli {

/// Runs one termkit command (args exclude the program name). Exit codes:
///   0  success
///   1  operation failure; one machine-readable JSON line
///      {"error": code, "message": ...} goes to `err`
///   2  usage error (unknown command, missing inputs), human-readable text
/// All artifacts are written atomically, and identical inputs produce
/// byte-identical outputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// main()-shaped adapter bound to std::cout / std::cerr.
int run(int argc, const char* const* argv);

} // namespace termkit::cli
