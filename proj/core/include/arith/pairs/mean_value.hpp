#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arith/arith_func.hpp"

namespace arith::pairs {

struct MeanValuePoint {
  std::uint64_t x;
  double mean;                  // (1/x) sum_{n <= x} |h(n)|
  std::optional<Rational> exact;  // same, exactly, for exact tables
};

/// Coarse shape of a partial-mean series, for flagging in reports.
enum class MeanTrend {
  kSettling,             // no sustained drift across checkpoints
  kIncreasingUnbounded,  // strictly increasing, last/first >= sqrt(x_last/x_first)
  kDecayingToZero,       // strictly decreasing, last/first <= sqrt(x_first/x_last)
};

struct MeanValueSeries {
  std::vector<MeanValuePoint> points;
  std::optional<std::uint64_t> truncation;  // y when h is a truncated convolution
  ValueMode mode = ValueMode::kExact;

  MeanTrend trend() const;
  std::string trend_label() const;
};

/// Partial means of |h| at each checkpoint (x = largest checkpoint <= N).
/// Exact tables get exact rational means alongside the double values.
MeanValueSeries mean_value_series(const ArithFunc& h, std::span<const std::uint64_t> checkpoints,
                                  std::optional<std::uint64_t> truncation = std::nullopt);

}  // namespace arith::pairs
