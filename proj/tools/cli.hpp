#pragma once

#include <iosfwd>

namespace kutate::cli {

/// Runs one CLI invocation. Returns 0 on success, 1 when a verification
/// subcommand found a failed identity, 2 on usage errors. The report goes to
/// `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kutate::cli
