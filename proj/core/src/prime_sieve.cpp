#include "arith/prime_sieve.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "arith/errors.hpp"

namespace arith {

PrimeSieve::PrimeSieve(std::uint32_t limit)
    : limit_(limit), spf_(std::size_t(limit) + 1), spf_power_(std::size_t(limit) + 1), spf_exp_(std::size_t(limit) + 1) {
  for (std::uint32_t n = 2; n <= limit; ++n) {
    if (spf_[n] == 0) {
      spf_[n] = n;
      primes_.push_back(n);
    }
    const std::uint32_t p_n = spf_[n];
    for (std::uint32_t p : primes_) {
      if (p > p_n || std::uint64_t(p) * n > limit) break;
      spf_[p * n] = p;
    }
    // spf_power: extend the chain from n / p when p still divides it
    const std::uint32_t rest = n / p_n;
    if (rest % p_n == 0) {
      spf_power_[n] = spf_power_[rest] * p_n;
      spf_exp_[n] = static_cast<std::uint8_t>(spf_exp_[rest] + 1);
    } else {
      spf_power_[n] = p_n;
      spf_exp_[n] = 1;
    }
  }
  if (limit >= 1) {
    spf_power_[1] = 1;
  }
}

std::vector<std::pair<std::uint32_t, unsigned>> PrimeSieve::factor(std::uint32_t n) const {
  if (n > limit_) throw RangeError("factor: n exceeds sieve limit");
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  while (n > 1) {
    out.emplace_back(spf_[n], spf_exp_[n]);
    n /= spf_power_[n];
  }
  return out;
}

std::shared_ptr<const PrimeSieve> sieve_for(std::uint64_t limit) {
  static std::mutex mu;
  static std::shared_ptr<const PrimeSieve> cached;
  if (limit > 0xFFFFFFF0ULL) throw ComplexityError("sieve limit exceeds 32-bit range");
  std::lock_guard lock(mu);
  if (!cached || cached->limit() < limit) {
    cached = std::make_shared<const PrimeSieve>(static_cast<std::uint32_t>(std::max<std::uint64_t>(limit, 16)));
  }
  return cached;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi <= lo || hi < 2) return out;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
  auto base = sieve_for(root);
  constexpr std::uint64_t kSegment = 1 << 20;
  std::vector<char> composite;
  for (std::uint64_t start = std::max<std::uint64_t>(lo + 1, 2); start <= hi; start += kSegment) {
    const std::uint64_t end = std::min(hi, start + kSegment - 1);
    composite.assign(end - start + 1, 0);
    for (std::uint32_t p : base->primes()) {
      const std::uint64_t pp = std::uint64_t(p) * p;
      if (pp > end) break;
      std::uint64_t first = std::max(pp, (start + p - 1) / p * p);
      for (std::uint64_t m = first; m <= end; m += p) composite[m - start] = 1;
    }
    for (std::uint64_t n = start; n <= end; ++n) {
      if (!composite[n - start]) out.push_back(n);
    }
  }
  return out;
}

double prime_reciprocal_square_remainder(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("remainder bound needs m >= 2");
  const double md = static_cast<double>(m);
  return 2.0 * 1.25506 / (md * std::log(md));
}

}  // namespace arith
