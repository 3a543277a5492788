#pragma once

#include <cstdint>
#include <iosfwd>

namespace arithconv {

inline constexpr std::uint64_t kDefaultMaxN = 10'000'000;

/// Largest N accepted by any command; ARITHCONV_MAX_N overrides the default.
std::uint64_t max_table_size();

/// Runs the command line. Returns the process exit code:
/// 0 success, 1 unexpected failure, 2 spec error, 3 hypothesis violation,
/// 4 complexity cap.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arithconv
