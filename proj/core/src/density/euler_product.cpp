#include "arith/density/euler_product.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "arith/density/empirical.hpp"
#include "arith/errors.hpp"
#include "arith/prime_sieve.hpp"

namespace arith::density {

namespace {

const UnsupportedPrimeTail& declared_tail(const MultiplicativeSpec& spec) {
  if (!spec.unsupported_tail) {
    throw SpecError("spec '" + spec.name +
                    "' declares no unsupported-prime tail regime (none / finite / sum bound / divergent)");
  }
  return *spec.unsupported_tail;
}

std::uint64_t effective_cutoff(const UnsupportedPrimeTail& tail, std::uint64_t prime_cutoff) {
  if (tail.kind == UnsupportedPrimeTail::Kind::kFinite) return std::max(prime_cutoff, tail.last_prime);
  return prime_cutoff;
}

std::uint64_t default_tail_limit(std::uint64_t prime_cutoff) {
  return std::min<std::uint64_t>(std::max<std::uint64_t>(100 * prime_cutoff, 1'000'000), 1'000'000'000);
}

}  // namespace

double prime_reciprocal_square_tail(std::uint64_t prime_cutoff, std::uint64_t limit) {
  if (limit == 0) limit = default_tail_limit(prime_cutoff);
  limit = std::max(limit, prime_cutoff + 1);
  long double sum = 0.0L;
  for (auto p : primes_in_range(prime_cutoff, limit)) {
    const long double pd = static_cast<long double>(p);
    sum += 1.0L / (pd * pd);
  }
  // one ulp-scale nudge keeps the bound on the safe side of rounding
  return static_cast<double>(sum) * (1.0 + 1e-12) + prime_reciprocal_square_remainder(limit);
}

EulerProductResult euler_product_support_density(const MultiplicativeSpec& spec, std::uint64_t prime_cutoff,
                                                 const EulerOptions& options) {
  const auto& tail = declared_tail(spec);
  EulerProductResult out;
  out.prime_cutoff = effective_cutoff(tail, prime_cutoff);

  if (tail.kind == UnsupportedPrimeTail::Kind::kDivergent) {
    out.value = 0.0;
    out.degenerate = true;
    out.tail_log_bound = INFINITY;
    out.error_bound = 0.0;
    out.factors_omitted_reason =
        "declared divergent sum of 1/p over unsupported primes: density of the support is 0";
    return out;
  }

  auto sieve = sieve_for(std::max<std::uint64_t>(out.prime_cutoff, 2));
  long double log_value = 0.0L;
  double truncation = 0.0;  // relative slack from cutting each k-series
  for (std::uint32_t p : sieve->primes()) {
    if (p > out.prime_cutoff) break;
    const double inv_p = 1.0 / p;
    // deficit = (1 - 1/p) * sum_{k >= 1, nu(p^k) = 0} p^-k
    double missing = 0.0;
    double term = 1.0;
    for (unsigned k = 1;; ++k) {
      term *= inv_p;
      if (spec.at_prime_power(p, k).is_zero(options.zero_test)) missing += term;
      const double remaining = term * inv_p / (1.0 - inv_p);
      const double factor = 1.0 - (1.0 - inv_p) * missing;
      if (remaining < options.k_series_tolerance * factor || term == 0.0) {
        truncation += (1.0 - inv_p) * remaining / factor;
        break;
      }
    }
    const double deficit = (1.0 - inv_p) * missing;
    log_value += std::log1p(-static_cast<long double>(deficit));
  }
  out.value = static_cast<double>(std::exp(log_value));

  // relative deficit of the omitted product: supported p contribute <= 1/p^2
  double relative = truncation + prime_reciprocal_square_tail(out.prime_cutoff, options.tail_prime_limit);
  std::ostringstream reason;
  reason << "supported primes p > " << out.prime_cutoff << " bounded by sum 1/p^2";
  if (tail.kind == UnsupportedPrimeTail::Kind::kSumBound) {
    relative += tail.sum_bound;
    reason << "; unsupported primes beyond cutoff bounded by declared sum 1/p <= " << format_double(tail.sum_bound);
  } else if (tail.kind == UnsupportedPrimeTail::Kind::kFinite) {
    reason << "; all unsupported primes <= " << tail.last_prime << " are enumerated";
  } else {
    reason << "; no unsupported primes beyond cutoff (declared)";
  }
  relative = std::min(relative, 1.0);
  out.tail_log_bound = relative >= 1.0 ? INFINITY : -std::log1p(-relative);
  out.error_bound = out.value * relative;
  out.factors_omitted_reason = reason.str();
  return out;
}

std::vector<DeficiencyPoint> support_prime_deficiency(const MultiplicativeSpec& spec, std::uint64_t prime_cutoff,
                                                      std::span<const std::uint64_t> checkpoints,
                                                      ZeroTest zero_test) {
  const auto ladder = normalize_checkpoints(checkpoints, prime_cutoff);
  auto sieve = sieve_for(std::max<std::uint64_t>(prime_cutoff, 2));
  std::vector<DeficiencyPoint> out;
  long double sum = 0.0L;
  std::uint64_t count = 0;
  auto primes = sieve->primes();
  std::size_t i = 0;
  for (auto cut : ladder) {
    for (; i < primes.size() && primes[i] <= cut; ++i) {
      if (spec.at_prime_power(primes[i], 1).is_zero(zero_test)) {
        sum += 1.0L / primes[i];
        ++count;
      }
    }
    out.push_back({cut, count, static_cast<double>(sum)});
  }
  return out;
}

EulerProductResult c_nu_constant(const MultiplicativeSpec& spec, std::uint64_t prime_cutoff, ZeroTest zero_test) {
  const auto& tail = declared_tail(spec);
  if (tail.kind == UnsupportedPrimeTail::Kind::kDivergent) {
    throw DegenerateConstant("spec '" + spec.name +
                             "': unsupported primes have divergent sum 1/p, so supp(nu) has density 0 and C_nu "
                             "is not defined");
  }
  EulerProductResult out;
  out.prime_cutoff = effective_cutoff(tail, prime_cutoff);
  auto sieve = sieve_for(std::max<std::uint64_t>(out.prime_cutoff, 2));
  long double log_value = std::log(static_cast<long double>(kSixOverPiSquared));
  for (std::uint32_t p : sieve->primes()) {
    if (p > out.prime_cutoff) break;
    if (spec.at_prime_power(p, 1).is_zero(zero_test)) log_value -= std::log1p(1.0L / p);
  }
  out.value = static_cast<double>(std::exp(log_value));
  if (tail.kind == UnsupportedPrimeTail::Kind::kSumBound) {
    out.tail_log_bound = tail.sum_bound;
    out.error_bound = out.value * -std::expm1(-tail.sum_bound);
    out.factors_omitted_reason = "unsupported primes beyond cutoff bounded by declared sum 1/p <= " +
                                 format_double(tail.sum_bound);
  } else if (tail.kind == UnsupportedPrimeTail::Kind::kFinite) {
    out.factors_omitted_reason = "all unsupported primes <= " + std::to_string(tail.last_prime) + " are enumerated";
  } else {
    out.factors_omitted_reason = "no unsupported primes beyond cutoff (declared)";
  }
  return out;
}

}  // namespace arith::density
