#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "arith/arith_func.hpp"
#include "arith/multiplicative.hpp"

namespace arith::pairs {

/// What is declared about a series tail beyond the tabulation limit N,
/// e.g. sum_{n > N, n in supp f} 1/n. A finite table cannot decide
/// thinness or summability, so theorem checks take it as an input.
struct TailDeclaration {
  enum class Kind { kUnknown, kFinite, kBounded };

  Kind kind = Kind::kUnknown;
  double bound = 0.0;

  static TailDeclaration unknown() { return {}; }
  /// Nothing beyond N (the series terminates inside the table).
  static TailDeclaration finite() { return {Kind::kFinite, 0.0}; }
  /// The tail beyond N is at most `tail`.
  static TailDeclaration bounded(double tail) { return {Kind::kBounded, tail}; }

  bool known() const noexcept { return kind != Kind::kUnknown; }
  /// 0 for finite, the bound for bounded; throws HypothesisError if unknown.
  double tail_value(const std::string& what) const;
  std::string to_string() const;
};

struct PairOptions {
  TailDeclaration f_support_tail;   // sum of 1/n over supp(f) beyond N
  TailDeclaration g_support_tail;   // sum of 1/n over supp(g) beyond N
  TailDeclaration f_weighted_tail;  // sum of |f(n)|/n beyond N
  bool verify_roundtrip = true;     // check g * nu^-1 == f eagerly (exact mode)
};

/// (f, g) with g = f * nu on [1, N] for multiplicative nu.
struct NuPair {
  ArithFunc f;
  ArithFunc nu;
  ArithFunc g;
  MultiplicativeSpec nu_spec;
  std::optional<MultiplicativeSpec> f_spec;  // set when f is multiplicative
  TailDeclaration f_support_tail;
  TailDeclaration g_support_tail;
  TailDeclaration f_weighted_tail;

  std::uint64_t limit() const { return g.limit(); }
};

/// Builds the pair. f is truncated to N if it is longer and must not be
/// shorter. Refuses (HypothesisError) when f vanishes on all of [1, N].
/// In exact mode the roundtrip g * nu^-1 == f is checked unless disabled;
/// a failure there is an internal error (std::logic_error).
NuPair make_pair(const ArithFunc& f, const MultiplicativeSpec& nu_spec, std::uint64_t limit,
                 const PairOptions& options = {});

/// Pair with multiplicative f given by its spec.
NuPair make_pair(const MultiplicativeSpec& f_spec, const MultiplicativeSpec& nu_spec, std::uint64_t limit,
                 ValueMode mode = ValueMode::kExact, const PairOptions& options = {});

/// g * nu^-1 == f on [1, N].
bool roundtrip_holds(const NuPair& pair);

/// g_y(n) = sum_{d | n, d <= y} f(d) nu(n/d) on [1, N].
ArithFunc truncated_convolution(const ArithFunc& f, const MultiplicativeSpec& nu_spec, std::uint64_t y,
                                std::uint64_t limit);
ArithFunc truncated_convolution(const NuPair& pair, std::uint64_t y);

}  // namespace arith::pairs
