#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "arith/arith_func.hpp"
#include "arith/value.hpp"

namespace arith {

/// What is known about the primes p with nu(p) = 0 beyond an enumeration
/// cutoff. Density and C_nu computations refuse to guess this.
struct UnsupportedPrimeTail {
  enum class Kind {
    kNone,       // every prime beyond the cutoff is supported
    kFinite,     // all unsupported primes are <= last_prime
    kSumBound,   // sum over unsupported p > cutoff of 1/p is <= sum_bound
    kDivergent,  // that sum diverges
  };

  Kind kind = Kind::kNone;
  std::uint64_t last_prime = 0;
  double sum_bound = 0.0;

  static UnsupportedPrimeTail none() { return {}; }
  static UnsupportedPrimeTail finite(std::uint64_t last_prime) { return {Kind::kFinite, last_prime, 0.0}; }
  static UnsupportedPrimeTail bounded(double sum_bound) { return {Kind::kSumBound, 0, sum_bound}; }
  static UnsupportedPrimeTail divergent() { return {Kind::kDivergent, 0, 0.0}; }

  std::string to_string() const;
};

/// Declared growth of |nu|; mean-value theorems need a bounded nu.
enum class Growth { kUnknown, kBounded, kUnbounded };

/// A multiplicative function given by its values on prime powers.
struct MultiplicativeSpec {
  using Rule = std::function<Value(std::uint64_t p, unsigned k)>;

  std::string name;
  Rule rule;
  std::optional<UnsupportedPrimeTail> unsupported_tail;
  Growth growth = Growth::kUnknown;

  /// rule(p, k) with failures rethrown as RuleError.
  Value at_prime_power(std::uint64_t p, unsigned k) const;
};

/// Tabulates spec on [1, N] with one linear-sieve pass:
/// f(n) = f(n / p^k) * rule(p, k) where p^k || n, p = spf(n).
/// The rule is only called at prime powers. In exact mode the rule must
/// produce exact values; floating mode converts exact rule values.
ArithFunc tabulate(const MultiplicativeSpec& spec, std::uint64_t limit,
                   ValueMode mode = ValueMode::kExact, ZeroTest zero_test = {});

/// Direct evaluation at a single n by trial-division factorization.
Value evaluate(const MultiplicativeSpec& spec, std::uint64_t n, ValueMode mode = ValueMode::kExact);

}  // namespace arith
