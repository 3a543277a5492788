#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "arith/rational.hpp"

namespace arith {

/// Exact prefix sums of a rational sequence at a list of cut points.
///
/// Each segment between cut points is summed by binary splitting with
/// unreduced GMP fractions (one gcd per segment), which keeps sums like
/// H_x = sum 1/n tractable where naive left-to-right reduction is
/// quadratic in the size of the denominators.
///
/// term(i) is called for i in [1, cuts.back()]; cuts must be ascending.
/// Returns the prefix sum up to each cut.
std::vector<Rational> exact_prefix_sums(const std::function<Rational(std::uint64_t)>& term,
                                        std::span<const std::uint64_t> cuts);

/// Sum of the given terms by binary splitting.
Rational exact_sum(std::span<const Rational> terms);

}  // namespace arith
