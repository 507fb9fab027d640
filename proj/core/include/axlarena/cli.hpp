#pragma once

#include <iosfwd>

namespace axl {

// Entry point behind the axl-arena binary, separated so tests can drive it
// in-process. Subcommands: tournament, match, moran, eco, train,
// list-strategies. Returns 0 on success, 2 on configuration errors
// (unknown strategy, bad flag or config value), 1 on runtime failures;
// diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace axl
