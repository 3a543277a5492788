#pragma once

#include <complex>
#include <string>
#include <variant>

#include "arith/rational.hpp"

namespace arith {

using Complex = std::complex<double>;

enum class ValueMode { kExact, kFloating };

std::string to_string(ValueMode mode);

/// How a floating value is judged to be zero.
///
/// kAbsolute: |v| <= tau. kRelative: |v| <= tau * scale, where scale is the
/// largest magnitude in the table the value belongs to. Exact values ignore
/// this entirely.
struct ZeroTest {
  enum class Rule { kAbsolute, kRelative };

  Rule rule = Rule::kAbsolute;
  double tau = 1e-12;

  bool is_zero(const Complex& v, double scale = 1.0) const noexcept {
    const double bound = rule == Rule::kAbsolute ? tau : tau * scale;
    return std::abs(v) <= bound;
  }

  /// "abs:1e-12" or "rel:1e-12".
  std::string to_string() const;

  friend bool operator==(const ZeroTest&, const ZeroTest&) = default;
};

/// One value of an arithmetic function: exact rational or complex double.
class Value {
 public:
  Value() : v_(Rational()) {}
  Value(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Value(Complex c) : v_(c) {}              // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Value(I i) : v_(Rational(i)) {}  // NOLINT(google-explicit-constructor)

  ValueMode mode() const noexcept {
    return std::holds_alternative<Rational>(v_) ? ValueMode::kExact : ValueMode::kFloating;
  }
  bool is_exact() const noexcept { return mode() == ValueMode::kExact; }

  /// Throws std::logic_error when the value is floating.
  const Rational& rational() const;
  Complex to_complex() const;
  double magnitude() const;

  bool is_zero(const ZeroTest& test = {}, double scale = 1.0) const;

  /// Exact values as "p/q"; floating values via shortest round-trip form,
  /// with an "+bi" / "-bi" suffix only when the imaginary part is nonzero.
  std::string to_string() const;

  /// Parses the format produced by to_string() for the requested mode.
  static Value parse(std::string_view text, ValueMode mode);

  friend bool operator==(const Value&, const Value&) = default;

 private:
  std::variant<Rational, Complex> v_;
};

/// Shortest round-trip decimal rendering of a double.
std::string format_double(double v);

}  // namespace arith
