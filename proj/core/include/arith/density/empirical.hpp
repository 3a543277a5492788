#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "arith/arith_func.hpp"
#include "arith/rational.hpp"

namespace arith::density {

/// 6/pi^2 to double precision; the squarefree density and C_mu.
inline constexpr double kSixOverPiSquared = 0.60792710185402662866327677925836583342615264803;

struct Checkpoint {
  std::uint64_t x;
  std::uint64_t count;  // #(A ∩ [1, x])
  double ratio() const { return static_cast<double>(count) / static_cast<double>(x); }
};

/// A(x)/x observed at a ladder of x values.
struct DensityEstimate {
  Rational value;  // count / x at the last checkpoint, or the exact density
  std::uint64_t x = 0;
  std::vector<Checkpoint> checkpoints;
  std::optional<ZeroTest> zero_threshold;  // set when membership came from a floating zero test
  bool exact = false;

  double approx() const { return value.to_double(); }
  /// min / max of the checkpoint ratios: finite stand-ins for lower and upper density.
  double lower() const;
  double upper() const;
};

/// 10, 100, ... below x, then x itself.
std::vector<std::uint64_t> decade_checkpoints(std::uint64_t x);

/// Sorted, deduplicated ladder that ends at x. Throws RangeError if a
/// checkpoint is 0 or exceeds x.
std::vector<std::uint64_t> normalize_checkpoints(std::span<const std::uint64_t> checkpoints, std::uint64_t x);

/// Counts n <= x_i satisfying the predicate at each checkpoint.
DensityEstimate empirical_density(const std::function<bool(std::uint64_t)>& indicator, std::uint64_t x,
                                  std::span<const std::uint64_t> checkpoints = {});

/// Same, for a tabulated support; x must not exceed its limit.
DensityEstimate empirical_density(const SupportSet& set, std::uint64_t x,
                                  std::span<const std::uint64_t> checkpoints = {});

struct ThinnessPoint {
  std::uint64_t x;
  std::uint64_t count;
  Rational sum;  // sum_{n in S, n <= x} 1/n
};

/// Exact partial sums of 1/n over an explicit set S (any order, no
/// duplicates required) at each checkpoint; the largest checkpoint is the
/// evaluation limit.
std::vector<ThinnessPoint> thinness_partial_sum(std::span<const std::uint64_t> members,
                                                std::span<const std::uint64_t> checkpoints);
std::vector<ThinnessPoint> thinness_partial_sum(const SupportSet& set, std::span<const std::uint64_t> checkpoints);

struct ThinnessApproxPoint {
  std::uint64_t x;
  std::uint64_t count;
  double sum;
};

/// Double-precision variant for large supports, where the exact sum's
/// denominator grows like lcm(1..x).
std::vector<ThinnessApproxPoint> thinness_partial_sum_approx(const SupportSet& set,
                                                             std::span<const std::uint64_t> checkpoints);

}  // namespace arith::density
