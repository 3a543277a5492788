#include "arith/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace arith {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits_small(i128 v) noexcept { return v >= -i128{kSmallMax} && v <= i128{kSmallMax}; }

std::uint64_t uabs(std::int64_t v) noexcept {
  return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v);
}

u128 gcd_u128(u128 a, u128 b) noexcept {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 mag = neg ? u128(0) - u128(v) : u128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

bool mpz_to_small(const mpz_class& z, std::int64_t& out) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
  long v = z.get_si();
  if (v == std::numeric_limits<long>::min()) return false;
  out = v;
  return true;
}

}  // namespace

struct RationalOps {
  // Canonicalizes num/den (den != 0) held in 128 bits.
  static Rational from_wide(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    u128 un = num < 0 ? u128(0) - u128(num) : u128(num);
    u128 g = gcd_u128(un, u128(den));
    if (g > 1) {
      num /= i128(g);
      den /= i128(g);
    }
    if (fits_small(num) && fits_small(den)) {
      Rational r;
      r.rep_ = Rational::Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
      return r;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    return Rational::from_big(std::move(q));
  }

  static const Rational::Small* small(const Rational& r) { return std::get_if<Rational::Small>(&r.rep_); }
};

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = RationalOps::from_wide(i128(num), i128(den));
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  *this = from_big(std::move(c));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  *this = from_big(std::move(q));
}

Rational Rational::from_big(mpq_class q) {
  Rational r;
  std::int64_t n = 0;
  std::int64_t d = 0;
  if (mpz_to_small(q.get_num(), n) && mpz_to_small(q.get_den(), d)) {
    r.rep_ = Small{n, d};
  } else {
    r.rep_ = std::move(q);
  }
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw bad();

  auto parse_int = [&](std::string_view s) -> mpz_class {
    if (s.empty()) throw bad();
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw bad();
    }
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    const bool neg = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) throw bad();
    mpz_class w = whole.empty() ? mpz_class(0) : parse_int(whole);
    mpz_class f = frac.empty() ? mpz_class(0) : parse_int(frac);
    if (!frac.empty() && (frac.front() == '-' || frac.front() == '+')) throw bad();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = w * scale + f;
    if (neg) num = -num;
    return Rational(num, scale);
  }
  return Rational(parse_int(text), mpz_class(1));
}

bool Rational::is_zero() const noexcept {
  if (auto s = std::get_if<Small>(&rep_)) return s->num == 0;
  return false;  // zero is always small
}

bool Rational::is_integer() const noexcept {
  if (auto s = std::get_if<Small>(&rep_)) return s->den == 1;
  return std::get<mpq_class>(rep_).get_den() == 1;
}

int Rational::sign() const noexcept {
  if (auto s = std::get_if<Small>(&rep_)) return (s->num > 0) - (s->num < 0);
  return sgn(std::get<mpq_class>(rep_));
}

mpz_class Rational::numerator() const {
  if (auto s = std::get_if<Small>(&rep_)) return mpz_class(static_cast<long>(s->num));
  return std::get<mpq_class>(rep_).get_num();
}

mpz_class Rational::denominator() const {
  if (auto s = std::get_if<Small>(&rep_)) return mpz_class(static_cast<long>(s->den));
  return std::get<mpq_class>(rep_).get_den();
}

mpq_class Rational::to_mpq() const {
  if (auto s = std::get_if<Small>(&rep_)) {
    return mpq_class(mpz_class(static_cast<long>(s->num)), mpz_class(static_cast<long>(s->den)));
  }
  return std::get<mpq_class>(rep_);
}

double Rational::to_double() const {
  if (auto s = std::get_if<Small>(&rep_)) {
    if (s->den == 1) return static_cast<double>(s->num);
    return static_cast<double>(s->num) / static_cast<double>(s->den);
  }
  return std::get<mpq_class>(rep_).get_d();
}

std::string Rational::to_string() const {
  if (auto s = std::get_if<Small>(&rep_)) {
    return s->den == 1 ? std::to_string(s->num)
                       : std::to_string(s->num) + "/" + std::to_string(s->den);
  }
  const auto& q = std::get<mpq_class>(rep_);
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  if (auto s = std::get_if<Small>(&rep_)) {
    Rational r;
    r.rep_ = s->num < 0 ? Small{-s->den, -s->num} : Small{s->den, s->num};
    return r;
  }
  mpq_class q = 1 / std::get<mpq_class>(rep_);
  return from_big(std::move(q));
}

Rational Rational::operator-() const {
  Rational r = *this;
  if (auto s = std::get_if<Small>(&r.rep_)) {
    s->num = -s->num;  // INT64_MIN is never stored
  } else {
    auto& q = std::get<mpq_class>(r.rep_);
    q = -q;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  const Small* a = RationalOps::small(*this);
  const Small* b = RationalOps::small(rhs);
  if (a && b) {
    if (a->den == b->den) {
      *this = RationalOps::from_wide(i128(a->num) + b->num, a->den);
      return *this;
    }
    const std::uint64_t g = std::gcd(std::uint64_t(a->den), std::uint64_t(b->den));
    if (g == 1) {
      *this = RationalOps::from_wide(i128(a->num) * b->den + i128(b->num) * a->den,
                                     i128(a->den) * b->den);
      return *this;
    }
    // Knuth 4.5.1: keeps intermediates small.
    const std::int64_t ad = a->den / std::int64_t(g);
    const std::int64_t bd = b->den / std::int64_t(g);
    const i128 t = i128(a->num) * bd + i128(b->num) * ad;
    *this = RationalOps::from_wide(t, i128(ad) * b->den);
    return *this;
  }
  mpq_class q = to_mpq() + rhs.to_mpq();
  *this = from_big(std::move(q));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  const Small* a = RationalOps::small(*this);
  const Small* b = RationalOps::small(rhs);
  if (a && b) {
    if (a->num == 0 || b->num == 0) {
      *this = Rational();
      return *this;
    }
    const auto g1 = std::int64_t(std::gcd(uabs(a->num), std::uint64_t(b->den)));
    const auto g2 = std::int64_t(std::gcd(uabs(b->num), std::uint64_t(a->den)));
    const i128 num = i128(a->num / g1) * (b->num / g2);
    const i128 den = i128(a->den / g2) * (b->den / g1);
    if (fits_small(num) && fits_small(den)) {
      rep_ = Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
    } else {
      *this = from_big(mpq_class(to_mpz(num), to_mpz(den)));
    }
    return *this;
  }
  mpq_class q = to_mpq() * rhs.to_mpq();
  *this = from_big(std::move(q));
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.reciprocal(); }

bool operator==(const Rational& a, const Rational& b) {
  const auto* sa = RationalOps::small(a);
  const auto* sb = RationalOps::small(b);
  if (sa && sb) return sa->num == sb->num && sa->den == sb->den;
  if (!sa && !sb) return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const auto* sa = RationalOps::small(a);
  const auto* sb = RationalOps::small(b);
  if (sa && sb) {
    const i128 lhs = i128(sa->num) * sb->den;
    const i128 rhs = i128(sb->num) * sa->den;
    return lhs <=> rhs;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace arith
