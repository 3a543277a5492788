#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace arith {

/// Smallest-prime-factor table on [0, N] built by a linear sieve.
///
/// Besides spf it records, for every n >= 2, the full power of spf(n)
/// dividing n and its exponent, which is what multiplicative tabulation
/// needs to split n = p^k * m with gcd(p, m) = 1 in O(1).
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint32_t limit);

  std::uint32_t limit() const noexcept { return limit_; }
  std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }
  /// p^k where p = spf(n) and p^k || n.
  std::uint32_t spf_power(std::uint32_t n) const { return spf_power_[n]; }
  std::uint8_t spf_exponent(std::uint32_t n) const { return spf_exp_[n]; }
  bool is_prime(std::uint32_t n) const { return n >= 2 && spf_[n] == n; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  /// Prime factorization of n <= limit() as (p, k) pairs, p ascending.
  std::vector<std::pair<std::uint32_t, unsigned>> factor(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> spf_power_;
  std::vector<std::uint8_t> spf_exp_;
  std::vector<std::uint32_t> primes_;
};

/// Shared sieve covering at least [0, limit]. The largest sieve built so
/// far is cached and reused by later calls with smaller limits.
std::shared_ptr<const PrimeSieve> sieve_for(std::uint64_t limit);

/// All primes p with lo < p <= hi, via a segmented sieve of Eratosthenes.
/// Works beyond the cached spf range without storing per-n data.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Upper bound for sum_{p > m} 1/p^2 from pi(t) < 1.25506 t / ln t:
/// sum_{p>m} p^-2 <= 2 * 1.25506 / (m ln m).
double prime_reciprocal_square_remainder(std::uint64_t m);

}  // namespace arith
