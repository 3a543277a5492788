#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arith/multiplicative.hpp"

namespace arith::density {

/// A truncated product over primes p <= prime_cutoff with a certificate
/// for the omitted factors. Every omitted factor lies in (0, 1], so the
/// exact product lies in [value * exp(-tail_log_bound), value].
struct EulerProductResult {
  double value = 0.0;
  std::uint64_t prime_cutoff = 0;
  double tail_log_bound = 0.0;  // >= |log(exact / value)|
  double error_bound = 0.0;     // >= value - exact
  std::string factors_omitted_reason;
  bool degenerate = false;  // declared divergent: the exact value is 0

  double lower() const { return value - error_bound; }
  double upper() const { return value; }
};

struct EulerOptions {
  /// Per-prime k-series cutoff: stop once the remaining geometric tail is
  /// below this fraction of the partial factor.
  double k_series_tolerance = 1e-15;
  /// Primes in (P, tail_prime_limit] are summed explicitly for the tail
  /// certificate; beyond that an analytic bound is used. 0 picks
  /// max(100 P, 10^6).
  std::uint64_t tail_prime_limit = 0;
  ZeroTest zero_test;  // for floating-valued rules
};

/// Density of supp(nu) for multiplicative nu:
///   prod_p (1 - 1/p) sum_{k >= 0, nu(p^k) != 0} p^-k,
/// evaluated per prime as 1 - (1 - 1/p) sum_{k >= 1, nu(p^k) = 0} p^-k.
/// Supported primes beyond the cutoff contribute factors in [1 - 1/p^2, 1];
/// unsupported ones factors >= 1 - 1/p, handled by the spec's declared
/// tail regime. A divergent declaration yields value 0.
EulerProductResult euler_product_support_density(const MultiplicativeSpec& spec, std::uint64_t prime_cutoff,
                                                 const EulerOptions& options = {});

struct DeficiencyPoint {
  std::uint64_t x;
  std::uint64_t unsupported_count;  // #{p <= x : nu(p) = 0}
  double sum;                       // sum of 1/p over those primes
};

/// Partial sums of 1/p over primes p <= x_i with nu(p) = 0. A divergence
/// diagnostic only: a finite table cannot decide convergence.
std::vector<DeficiencyPoint> support_prime_deficiency(const MultiplicativeSpec& spec, std::uint64_t prime_cutoff,
                                                      std::span<const std::uint64_t> checkpoints = {},
                                                      ZeroTest zero_test = {});

/// C_nu = (6/pi^2) prod_{p : nu(p) = 0} (1 + 1/p)^-1 truncated at the
/// cutoff; the declared unsupported tail bound B gives tail_log_bound = B
/// since log(1 + 1/p) <= 1/p. Throws DegenerateConstant for a divergent
/// declaration and SpecError when no tail regime is declared.
EulerProductResult c_nu_constant(const MultiplicativeSpec& spec, std::uint64_t prime_cutoff,
                                 ZeroTest zero_test = {});

/// Certified upper bound for sum_{p > P} 1/p^2: explicit primes up to
/// `limit`, analytic remainder beyond.
double prime_reciprocal_square_tail(std::uint64_t prime_cutoff, std::uint64_t limit = 0);

}  // namespace arith::density
