#pragma once

// Command line entry point, callable in-process for testing.
//
// Exit codes: 0 = valid, 1 = invalid (with witnesses in the report),
// 2 = malformed input. Reports go to `out` as JSON; diagnostics to `err`.

#include <iosfwd>
#include <string>
#include <vector>

namespace orbicat::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orbicat::cli
