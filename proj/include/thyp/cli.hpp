#pragma once

#include <iosfwd>

namespace thyp {

/// Exit codes: 0 success, 1 audit violations or failed self-test, 2 input or feasibility error.
/// A constructor that fails its own verification aborts the process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thyp
