#include "arith/convolution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "arith/builtins.hpp"
#include "arith/errors.hpp"
#include "arith/multiplicative.hpp"

namespace arith {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kParallelThreshold = 1 << 15;

bool exactly_zero(const Rational& r) { return r.is_zero(); }
bool exactly_zero(const Complex& c) { return c == Complex(0.0, 0.0); }

void check_compatible(const ArithFunc& f, const ArithFunc& g) {
  if (f.limit() != g.limit()) {
    throw ShapeError("convolution limits differ: " + std::to_string(f.limit()) + " vs " +
                     std::to_string(g.limit()));
  }
  if (f.mode() != g.mode()) throw ShapeError("convolution of exact and floating tables");
}

// Accumulates out[n - lo] for n in [lo, hi], d ascending, d <= dmax.
template <class T>
void convolve_block(std::span<const T> f, std::span<const T> g, std::uint64_t dmax, std::uint64_t lo,
                    std::uint64_t hi, T* out) {
  const std::uint64_t dlim = std::min(dmax, hi);
  for (std::uint64_t d = 1; d <= dlim; ++d) {
    const T& fd = f[d - 1];
    if (exactly_zero(fd)) continue;
    const std::uint64_t m_first = std::max<std::uint64_t>(1, (lo + d - 1) / d);
    const std::uint64_t m_last = hi / d;
    for (std::uint64_t m = m_first; m <= m_last; ++m) {
      const T& gm = g[m - 1];
      if (exactly_zero(gm)) continue;
      out[d * m - lo] += fd * gm;
    }
  }
}

// Calls block(lo, hi) over a partition of [1, n], in parallel for large n.
template <class Block>
void run_blocks(std::uint64_t n, Block&& block) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = n < kParallelThreshold ? 1u : std::min(hw, 8u);
  if (workers == 1) {
    block(1, n);
    return;
  }
  // Blocks are sized so later (cheaper per n, longer d loop) blocks balance out.
  std::vector<std::jthread> pool;
  const std::uint64_t blocks = workers * 4ULL;
  std::atomic<std::uint64_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t b = next++; b < blocks; b = next++) {
        const std::uint64_t lo = 1 + b * n / blocks;
        const std::uint64_t hi = (b + 1) * n / blocks;
        if (lo <= hi) block(lo, hi);
      }
    });
  }
}

template <class T>
std::vector<T> convolve_values(std::span<const T> f, std::span<const T> g, std::uint64_t dmax) {
  std::vector<T> out(f.size());
  run_blocks(f.size(), [&](std::uint64_t lo, std::uint64_t hi) {
    convolve_block<T>(f, g, dmax, lo, hi, out.data() + (lo - 1));
  });
  return out;
}

// ---- integer fast path for exact tables of small rationals ----
//
// f = F / Df and g = G / Dg with integer F, G; then f * g = (F * G) / (Df Dg),
// and F * G is accumulated in 128 bits. One gcd per output instead of one
// per term.

struct ScaledTable {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;
  std::uint64_t max_abs = 0;
};

std::optional<ScaledTable> scale_to_integers(std::span<const Rational> f) {
  ScaledTable t;
  std::int64_t a = 0, b = 1;
  for (const auto& r : f) {
    if (!r.small_parts(a, b)) return std::nullopt;
    if (t.den % b != 0) {
      const i128 l = i128{t.den} / std::gcd(t.den, b) * b;
      if (l > i128{1} << 62) return std::nullopt;
      t.den = static_cast<std::int64_t>(l);
    }
  }
  t.num.reserve(f.size());
  for (const auto& r : f) {
    r.small_parts(a, b);
    const i128 v = i128{a} * (t.den / b);
    if (v > i128{1} << 62 || v < -(i128{1} << 62)) return std::nullopt;
    t.num.push_back(static_cast<std::int64_t>(v));
    t.max_abs = std::max<std::uint64_t>(t.max_abs, static_cast<std::uint64_t>(v < 0 ? -v : v));
  }
  return t;
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  const u128 m = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class out(static_cast<unsigned long>(m >> 64));
  out <<= 64;
  out += mpz_class(static_cast<unsigned long>(m & ~std::uint64_t{0}));
  return neg ? mpz_class(-out) : out;
}

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_rational(i128 num, i128 den) {
  if (num == 0) return Rational();
  const u128 mag = num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num);
  const u128 g = gcd128(mag, static_cast<u128>(den));
  num /= static_cast<i128>(g);
  den /= static_cast<i128>(g);
  constexpr i128 lim = std::numeric_limits<std::int64_t>::max();
  if (num >= -lim && num <= lim && den <= lim) {
    return Rational(static_cast<long long>(num), static_cast<long long>(den));
  }
  return Rational(to_mpz(num), to_mpz(den));
}

std::optional<std::vector<Rational>> convolve_scaled(std::span<const Rational> f, std::span<const Rational> g,
                                                     std::uint64_t dmax) {
  const auto sf = scale_to_integers(f);
  if (!sf) return std::nullopt;
  const auto sg = scale_to_integers(g);
  if (!sg) return std::nullopt;
  // every output sums at most n terms of size max|F| max|G|
  const long double worst = static_cast<long double>(sf->max_abs) * static_cast<long double>(sg->max_abs) *
                            static_cast<long double>(f.size());
  if (worst >= std::ldexp(1.0L, 125)) return std::nullopt;

  const std::uint64_t n = f.size();
  const i128 den = i128{sf->den} * sg->den;
  std::vector<Rational> out(n);
  run_blocks(n, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<i128> acc(hi - lo + 1, 0);
    const std::uint64_t dlim = std::min(dmax, hi);
    for (std::uint64_t d = 1; d <= dlim; ++d) {
      const std::int64_t fd = sf->num[d - 1];
      if (fd == 0) continue;
      const std::uint64_t m_first = std::max<std::uint64_t>(1, (lo + d - 1) / d);
      const std::uint64_t m_last = hi / d;
      for (std::uint64_t m = m_first; m <= m_last; ++m) {
        const std::int64_t gm = sg->num[m - 1];
        if (gm != 0) acc[d * m - lo] += i128{fd} * gm;
      }
    }
    for (std::uint64_t k = lo; k <= hi; ++k) out[k - 1] = make_rational(acc[k - lo], den);
  });
  return out;
}

ArithFunc convolve_impl(const ArithFunc& f, const ArithFunc& g, std::uint64_t dmax) {
  check_compatible(f, g);
  if (f.is_exact()) {
    if (auto fast = convolve_scaled(f.exact_values(), g.exact_values(), dmax)) return ArithFunc::exact(std::move(*fast));
    return ArithFunc::exact(convolve_values<Rational>(f.exact_values(), g.exact_values(), dmax));
  }
  return ArithFunc::floating(convolve_values<Complex>(f.floating_values(), g.floating_values(), dmax),
                             f.zero_test());
}

template <class T>
std::vector<T> inverse_values(std::span<const T> f) {
  const std::uint64_t n = f.size();
  std::vector<T> acc(n);  // acc[m-1] = sum_{d | m, d < m} inv(d) f(m/d)
  std::vector<T> inv(n);
  const T inv_f1 = T(1) / f[0];
  inv[0] = inv_f1;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (d > 1) inv[d - 1] = -(acc[d - 1] * inv_f1);
    const T& id = inv[d - 1];
    if (exactly_zero(id)) continue;
    for (std::uint64_t m = 2; d * m <= n; ++m) {
      const T& fm = f[m - 1];
      if (exactly_zero(fm)) continue;
      acc[d * m - 1] += id * fm;
    }
  }
  return inv;
}

// Integer f with f(1) = +-1 has an integer inverse; run the recursion in
// int64 and give up on the first overflow.
std::optional<std::vector<Rational>> inverse_integral(std::span<const Rational> f) {
  const std::uint64_t n = f.size();
  std::vector<std::int64_t> fi(n);
  std::int64_t a = 0, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!f[i].small_parts(a, b) || b != 1) return std::nullopt;
    fi[i] = a;
  }
  if (fi[0] != 1 && fi[0] != -1) return std::nullopt;
  const std::int64_t f1 = fi[0];
  std::vector<std::int64_t> acc(n, 0), inv(n, 0);
  inv[0] = f1;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (d > 1) {
      if (acc[d - 1] == std::numeric_limits<std::int64_t>::min()) return std::nullopt;
      inv[d - 1] = -acc[d - 1] * f1;
    }
    const std::int64_t id = inv[d - 1];
    if (id == 0) continue;
    for (std::uint64_t m = 2; d * m <= n; ++m) {
      const std::int64_t fm = fi[m - 1];
      if (fm == 0) continue;
      std::int64_t term = 0;
      if (__builtin_mul_overflow(id, fm, &term) || __builtin_add_overflow(acc[d * m - 1], term, &acc[d * m - 1])) {
        return std::nullopt;
      }
    }
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto v : inv) out.emplace_back(v);
  return out;
}

}  // namespace

ArithFunc convolve(const ArithFunc& f, const ArithFunc& g) {
  return convolve_impl(f, g, f.limit());
}

ArithFunc convolve_truncated(const ArithFunc& f, const ArithFunc& g, std::uint64_t y) {
  return convolve_impl(f, g, std::min(y, f.limit()));
}

ArithFunc dirichlet_inverse(const ArithFunc& f) {
  if (f.is_zero_at(1)) {
    throw NotInvertible("f(1) = 0: no Dirichlet inverse exists (f(1) = " + f.at(1).to_string() + ")");
  }
  if (f.is_exact()) {
    if (auto fast = inverse_integral(f.exact_values())) return ArithFunc::exact(std::move(*fast));
    return ArithFunc::exact(inverse_values<Rational>(f.exact_values()));
  }
  return ArithFunc::floating(inverse_values<Complex>(f.floating_values()), f.zero_test());
}

ArithFunc dirichlet_transform(const ArithFunc& f) {
  return convolve(f, tabulate(builtins::one(), f.limit(), f.mode(), f.zero_test()));
}

ArithFunc mobius_transform(const ArithFunc& f) {
  return convolve(f, tabulate(builtins::mobius(), f.limit(), f.mode(), f.zero_test()));
}

}  // namespace arith
