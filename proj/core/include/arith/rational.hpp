#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include <gmpxx.h>

namespace arith {

/// Exact rational number.
///
/// Values whose canonical numerator and denominator both fit in a signed
/// 64-bit word (excluding INT64_MIN) are stored inline and operated on with
/// 128-bit intermediates; anything larger is promoted to a GMP rational and
/// demoted again as soon as it fits. The representation is canonical, so
/// structural equality is value equality.
class Rational {
 public:
  Rational() noexcept : rep_(Small{0, 1}) {}

  template <std::integral I>
  Rational(I value)  // NOLINT(google-explicit-constructor)
      : Rational(static_cast<long long>(value), 1LL) {
    if constexpr (std::is_unsigned_v<I> && sizeof(I) >= sizeof(long long)) {
      if (value > static_cast<I>(std::numeric_limits<long long>::max())) {
        *this = Rational(mpz_class(static_cast<unsigned long>(value)));
      }
    }
  }

  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& num, const mpz_class& den = 1);

  /// Parses "p", "-p", "p/q" or a finite decimal such as "-0.125".
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept;
  bool is_integer() const noexcept;
  bool is_small() const noexcept { return std::holds_alternative<Small>(rep_); }
  /// Numerator and denominator of a value held inline; false for big values.
  bool small_parts(std::int64_t& num, std::int64_t& den) const noexcept {
    const Small* s = std::get_if<Small>(&rep_);
    if (!s) return false;
    num = s->num;
    den = s->den;
    return true;
  }
  int sign() const noexcept;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  double to_double() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational abs() const;
  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Small {
    std::int64_t num;
    std::int64_t den;  // > 0, gcd(num, den) == 1
  };

  friend struct RationalOps;
  static Rational from_big(mpq_class q);

  std::variant<Small, mpq_class> rep_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace arith
