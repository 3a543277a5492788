#pragma once

#include <cstdint>
#include <limits>

#include "arith/arith_func.hpp"

namespace arith {

/// (f * g)(n) = sum_{d | n} f(d) g(n/d) for n <= N.
///
/// Runs over (d, m) pairs with d*m <= N, skipping d with f(d) = 0 and m
/// with g(m) = 0, so the cost is O(N log N) in the worst case and O(N)
/// when f is sparse. Large tables are split into output blocks handled
/// in parallel; each block accumulates n's terms in ascending d, so the
/// result is bit-identical to the sequential loop in floating mode too.
/// Throws ShapeError on mismatched limits or modes.
ArithFunc convolve(const ArithFunc& f, const ArithFunc& g);

/// g_y(n) = sum_{d | n, d <= y} f(d) g(n/d). y >= N gives convolve(f, g).
ArithFunc convolve_truncated(const ArithFunc& f, const ArithFunc& g, std::uint64_t y);

/// Dirichlet inverse by the recursion f^-1(1) = 1/f(1),
/// f^-1(n) = -(1/f(1)) sum_{d | n, d < n} f^-1(d) f(n/d), evaluated
/// forward: once d is reached all its proper divisors have contributed.
/// Throws NotInvertible when f(1) is zero under the table's zero test.
ArithFunc dirichlet_inverse(const ArithFunc& f);

/// f * 1 (Dirichlet transform, "f hat").
ArithFunc dirichlet_transform(const ArithFunc& f);
/// f * mu (Moebius transform, "f check").
ArithFunc mobius_transform(const ArithFunc& f);

}  // namespace arith
