#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arith {

/// Root of every error raised by the library. Each subclass maps to one
/// failure category so front ends can translate them into exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad spec, residue out of range, missing declaration.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// A multiplicative rule failed (threw or produced an unusable value)
/// at a specific prime power.
class RuleError : public SpecError {
 public:
  RuleError(std::uint64_t p, unsigned k, const std::string& what)
      : SpecError("rule failed at p=" + std::to_string(p) +
                  ", k=" + std::to_string(k) + ": " + what),
        prime_(p),
        exponent_(k) {}

  std::uint64_t prime() const noexcept { return prime_; }
  unsigned exponent() const noexcept { return exponent_; }

 private:
  std::uint64_t prime_;
  unsigned exponent_;
};

/// Tables with mismatched limits or value modes.
class ShapeError : public SpecError {
 public:
  using SpecError::SpecError;
};

/// A query outside the tabulated range.
class RangeError : public SpecError {
 public:
  using SpecError::SpecError;
};

/// A mathematical hypothesis of the requested operation does not hold
/// (or was not declared).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// f(1) = 0, so f has no Dirichlet inverse.
class NotInvertible : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

/// The operation needs a multiplicative (spec-backed) function.
class NotMultiplicative : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

/// C_nu would be zero: the unsupported primes have a divergent 1/p sum.
class DegenerateConstant : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

/// A configured size cap (subset count, modulus, table limit) was hit.
class ComplexityError : public Error {
 public:
  using Error::Error;
};

}  // namespace arith
