#include "arith/multiplicative.hpp"

#include <exception>

#include "arith/errors.hpp"
#include "arith/prime_sieve.hpp"

namespace arith {

std::string UnsupportedPrimeTail::to_string() const {
  switch (kind) {
    case Kind::kNone:
      return "none";
    case Kind::kFinite:
      return "finite:" + std::to_string(last_prime);
    case Kind::kSumBound:
      return "sum:" + format_double(sum_bound);
    case Kind::kDivergent:
      return "divergent";
  }
  return "?";
}

Value MultiplicativeSpec::at_prime_power(std::uint64_t p, unsigned k) const {
  if (!rule) throw RuleError(p, k, "spec '" + name + "' has no rule");
  try {
    return rule(p, k);
  } catch (const RuleError&) {
    throw;
  } catch (const std::exception& e) {
    throw RuleError(p, k, e.what());
  }
}

namespace {

template <class T>
T convert_rule_value(const Value& v, std::uint64_t p, unsigned k) {
  if constexpr (std::is_same_v<T, Rational>) {
    if (!v.is_exact()) throw RuleError(p, k, "floating value in an exact tabulation");
    return v.rational();
  } else {
    return v.to_complex();
  }
}

template <class T>
std::vector<T> tabulate_values(const MultiplicativeSpec& spec, std::uint32_t limit) {
  auto sieve = sieve_for(limit);
  std::vector<T> out(limit);
  out[0] = T(1);
  for (std::uint32_t n = 2; n <= limit; ++n) {
    const std::uint32_t pk = sieve->spf_power(n);
    if (pk == n) {
      out[n - 1] = convert_rule_value<T>(spec.at_prime_power(sieve->spf(n), sieve->spf_exponent(n)),
                                         sieve->spf(n), sieve->spf_exponent(n));
    } else {
      out[n - 1] = out[n / pk - 1] * out[pk - 1];
    }
  }
  return out;
}

}  // namespace

ArithFunc tabulate(const MultiplicativeSpec& spec, std::uint64_t limit, ValueMode mode, ZeroTest zero_test) {
  if (limit < 1) throw ShapeError("tabulate: N must be >= 1");
  if (limit > 0xFFFFFFF0ULL) throw ComplexityError("tabulate: N exceeds 32-bit range");
  const auto n = static_cast<std::uint32_t>(limit);
  if (mode == ValueMode::kExact) return ArithFunc::exact(tabulate_values<Rational>(spec, n));
  return ArithFunc::floating(tabulate_values<Complex>(spec, n), zero_test);
}

Value evaluate(const MultiplicativeSpec& spec, std::uint64_t n, ValueMode mode) {
  if (n < 1) throw RangeError("evaluate: n must be >= 1");
  Rational exact(1);
  Complex floating(1.0, 0.0);
  std::uint64_t m = n;
  auto take = [&](std::uint64_t p) {
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k == 0) return;
    Value v = spec.at_prime_power(p, k);
    if (mode == ValueMode::kExact) {
      exact *= convert_rule_value<Rational>(v, p, k);
    } else {
      floating *= v.to_complex();
    }
  };
  for (std::uint64_t p = 2; p * p <= m; ++p) take(p);
  if (m > 1) take(m);
  return mode == ValueMode::kExact ? Value(exact) : Value(floating);
}

}  // namespace arith
