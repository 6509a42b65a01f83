#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lamps::cli {

/// Parse and run one command line (without the program name). Streams are
/// injected so tests can drive the full CLI in-process.
///
/// Exit codes: 0 success/feasible, 1 infeasible instance or failed
/// verification, 2 usage/parse/budget error, 3 internal invariant violation
/// (including a failed theorem suite).
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace lamps::cli
