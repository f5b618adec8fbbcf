#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypermatch {

inline constexpr const char* kToolVersion = "hypermatch 0.1.0";

// Full command-line surface; args excludes the program name. Writes result
// documents to `out` and diagnostics to `err`. Exit codes: 0 success, 2 parse
// or usage error, 3 precondition violation, 4 resource guard tripped, 70
// internal invariant failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hypermatch
