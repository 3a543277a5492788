#include "arith/pairs/mean_value.hpp"

#include <algorithm>
#include <cmath>

#include "arith/density/empirical.hpp"
#include "arith/errors.hpp"
#include "arith/exact_sum.hpp"

namespace arith::pairs {

MeanTrend MeanValueSeries::trend() const {
  if (points.size() < 2) return MeanTrend::kSettling;
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 1; i < points.size(); ++i) {
    increasing = increasing && points[i].mean > points[i - 1].mean;
    decreasing = decreasing && points[i].mean < points[i - 1].mean;
  }
  const auto& first = points.front();
  const auto& last = points.back();
  const double span = std::sqrt(static_cast<double>(last.x) / static_cast<double>(first.x));
  if (increasing && first.mean > 0 && last.mean / first.mean >= span) return MeanTrend::kIncreasingUnbounded;
  if (decreasing && last.mean <= first.mean / span) return MeanTrend::kDecayingToZero;
  return MeanTrend::kSettling;
}

std::string MeanValueSeries::trend_label() const {
  switch (trend()) {
    case MeanTrend::kIncreasingUnbounded:
      return "no finite mean value";
    case MeanTrend::kDecayingToZero:
      return "mean value tending to zero";
    case MeanTrend::kSettling:
      break;
  }
  return "settling";
}

MeanValueSeries mean_value_series(const ArithFunc& h, std::span<const std::uint64_t> checkpoints,
                                  std::optional<std::uint64_t> truncation) {
  const std::uint64_t x = checkpoints.empty() ? h.limit()
                                              : *std::max_element(checkpoints.begin(), checkpoints.end());
  if (x > h.limit()) throw RangeError("mean value checkpoint exceeds N");
  const auto ladder = density::normalize_checkpoints(checkpoints, x);

  MeanValueSeries out;
  out.truncation = truncation;
  out.mode = h.mode();
  if (h.is_exact()) {
    const auto values = h.exact_values();
    const auto sums = exact_prefix_sums([&](std::uint64_t n) { return values[n - 1].abs(); }, ladder);
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      Rational mean = sums[i] / Rational(ladder[i]);
      out.points.push_back({ladder[i], mean.to_double(), std::move(mean)});
    }
    return out;
  }
  const auto values = h.floating_values();
  long double sum = 0.0L;
  std::uint64_t n = 0;
  for (auto cut : ladder) {
    for (; n < cut; ++n) sum += std::abs(values[n]);
    out.points.push_back({cut, static_cast<double>(sum / cut), std::nullopt});
  }
  return out;
}

}  // namespace arith::pairs
