#pragma once

#include <iosfwd>
#include <string>

#include "arith/arith_func.hpp"

namespace arith {

/// Writes "n,value" with a header line, one row per n in [1, N], LF endings.
/// Exact values are rendered "p/q" (integers without "/1").
void write_table_csv(std::ostream& os, const ArithFunc& f);
std::string table_csv(const ArithFunc& f);

/// Reads the format above. Rows may be sparse and unordered; missing n are
/// zero. The header is optional. limit = 0 takes N from the largest n seen.
ArithFunc read_table_csv(std::istream& is, ValueMode mode, std::uint64_t limit = 0, ZeroTest zero_test = {});

}  // namespace arith
