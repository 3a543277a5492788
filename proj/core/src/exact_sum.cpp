#include "arith/exact_sum.hpp"

#include <stdexcept>

namespace arith {

namespace {

struct Fraction {
  mpz_class num;
  mpz_class den;
};

Fraction leaf(const Rational& r) { return {r.numerator(), r.denominator()}; }

// Sum of terms in [lo, hi), unreduced.
template <class Term>
Fraction split_sum(const Term& term, std::uint64_t lo, std::uint64_t hi) {
  if (hi - lo == 1) return leaf(term(lo));
  if (hi - lo <= 16) {
    // short runs: plain accumulation, equal denominators are common
    Fraction acc = leaf(term(lo));
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
      Fraction t = leaf(term(i));
      if (t.den == acc.den) {
        acc.num += t.num;
      } else {
        acc.num = acc.num * t.den + t.num * acc.den;
        acc.den *= t.den;
      }
    }
    return acc;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  Fraction a = split_sum(term, lo, mid);
  Fraction b = split_sum(term, mid, hi);
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

}  // namespace

std::vector<Rational> exact_prefix_sums(const std::function<Rational(std::uint64_t)>& term,
                                        std::span<const std::uint64_t> cuts) {
  std::vector<Rational> out;
  out.reserve(cuts.size());
  Rational running;
  std::uint64_t done = 0;
  for (std::uint64_t cut : cuts) {
    if (cut < done) throw std::invalid_argument("exact_prefix_sums: cut points must ascend");
    if (cut > done) {
      Fraction seg = split_sum(term, done + 1, cut + 1);
      running += Rational(seg.num, seg.den);
      done = cut;
    }
    out.push_back(running);
  }
  return out;
}

Rational exact_sum(std::span<const Rational> terms) {
  if (terms.empty()) return Rational();
  Fraction f = split_sum([&](std::uint64_t i) -> const Rational& { return terms[i]; }, 0, terms.size());
  return Rational(f.num, f.den);
}

}  // namespace arith
