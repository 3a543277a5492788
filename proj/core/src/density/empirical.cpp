#include "arith/density/empirical.hpp"

#include <algorithm>

#include "arith/errors.hpp"
#include "arith/exact_sum.hpp"

namespace arith::density {

double DensityEstimate::lower() const {
  double out = checkpoints.empty() ? approx() : checkpoints.front().ratio();
  for (const auto& c : checkpoints) out = std::min(out, c.ratio());
  return out;
}

double DensityEstimate::upper() const {
  double out = checkpoints.empty() ? approx() : checkpoints.front().ratio();
  for (const auto& c : checkpoints) out = std::max(out, c.ratio());
  return out;
}

std::vector<std::uint64_t> decade_checkpoints(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 10; c < x; c *= 10) out.push_back(c);
  if (x > 0) out.push_back(x);
  return out;
}

std::vector<std::uint64_t> normalize_checkpoints(std::span<const std::uint64_t> checkpoints, std::uint64_t x) {
  if (x == 0) throw RangeError("density limit x must be >= 1");
  std::vector<std::uint64_t> out(checkpoints.begin(), checkpoints.end());
  for (auto c : out) {
    if (c == 0 || c > x) {
      throw RangeError("checkpoint " + std::to_string(c) + " outside [1, " + std::to_string(x) + "]");
    }
  }
  out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

template <class Member>
DensityEstimate count_ladder(const Member& member, std::uint64_t x, std::span<const std::uint64_t> checkpoints) {
  DensityEstimate est;
  est.x = x;
  std::uint64_t count = 0;
  std::uint64_t n = 0;
  for (std::uint64_t cut : normalize_checkpoints(checkpoints, x)) {
    for (; n < cut; ++n) count += member(n + 1) ? 1 : 0;
    est.checkpoints.push_back({cut, count});
  }
  est.value = Rational(static_cast<long long>(count), static_cast<long long>(x));
  return est;
}

}  // namespace

DensityEstimate empirical_density(const std::function<bool(std::uint64_t)>& indicator, std::uint64_t x,
                                  std::span<const std::uint64_t> checkpoints) {
  return count_ladder(indicator, x, checkpoints);
}

DensityEstimate empirical_density(const SupportSet& set, std::uint64_t x, std::span<const std::uint64_t> checkpoints) {
  if (x > set.limit()) {
    throw RangeError("density limit " + std::to_string(x) + " exceeds tabulation limit " +
                     std::to_string(set.limit()));
  }
  const auto& mask = set.mask();
  DensityEstimate est = count_ladder([&](std::uint64_t n) { return bool(mask[n - 1]); }, x, checkpoints);
  est.zero_threshold = set.threshold();
  return est;
}

std::vector<ThinnessPoint> thinness_partial_sum(std::span<const std::uint64_t> members,
                                                std::span<const std::uint64_t> checkpoints) {
  std::vector<std::uint64_t> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.front() == 0) throw SpecError("thinness sum over a set containing 0");
  if (checkpoints.empty()) return {};
  const std::uint64_t x = *std::max_element(checkpoints.begin(), checkpoints.end());
  const auto ladder = normalize_checkpoints(checkpoints, x);

  std::vector<std::uint64_t> cuts;  // members counted at each checkpoint
  for (auto c : ladder) {
    cuts.push_back(static_cast<std::uint64_t>(std::upper_bound(sorted.begin(), sorted.end(), c) - sorted.begin()));
  }
  auto sums = exact_prefix_sums(
      [&](std::uint64_t i) { return Rational(1, static_cast<long long>(sorted[i - 1])); }, cuts);
  std::vector<ThinnessPoint> out;
  for (std::size_t i = 0; i < ladder.size(); ++i) out.push_back({ladder[i], cuts[i], std::move(sums[i])});
  return out;
}

std::vector<ThinnessPoint> thinness_partial_sum(const SupportSet& set, std::span<const std::uint64_t> checkpoints) {
  for (auto c : checkpoints) {
    if (c > set.limit()) throw RangeError("checkpoint exceeds tabulation limit");
  }
  const auto members = set.members();
  return thinness_partial_sum(members, checkpoints);
}

std::vector<ThinnessApproxPoint> thinness_partial_sum_approx(const SupportSet& set,
                                                             std::span<const std::uint64_t> checkpoints) {
  if (checkpoints.empty()) return {};
  const std::uint64_t x = *std::max_element(checkpoints.begin(), checkpoints.end());
  if (x > set.limit()) throw RangeError("checkpoint exceeds tabulation limit");
  std::vector<ThinnessApproxPoint> out;
  long double sum = 0.0L;
  std::uint64_t count = 0;
  std::uint64_t n = 0;
  const auto& mask = set.mask();
  for (auto cut : normalize_checkpoints(checkpoints, x)) {
    for (; n < cut; ++n) {
      if (mask[n]) {
        ++count;
        sum += 1.0L / static_cast<long double>(n + 1);
      }
    }
    out.push_back({cut, count, static_cast<double>(sum)});
  }
  return out;
}

}  // namespace arith::density
