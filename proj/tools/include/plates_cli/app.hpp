#pragma once

#include <iosfwd>

namespace plates_cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidConfig = 2;

/// Parses argv and runs one of `profile`, `energy` or `verify`.  Output goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace plates_cli
