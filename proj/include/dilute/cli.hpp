#pragma once

#include <iosfwd>

namespace dilute {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dilute
