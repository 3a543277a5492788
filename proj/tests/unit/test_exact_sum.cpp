#include <vector>

#include "arith/exact_sum.hpp"
#include "doctest.h"

using arith::Rational;

TEST_SUITE("exact_sum") {
  TEST_CASE("harmonic numbers") {
    std::vector<std::uint64_t> cuts{1, 2, 10, 1000};
    auto h = arith::exact_prefix_sums([](std::uint64_t i) { return Rational(1, static_cast<long long>(i)); }, cuts);
    CHECK(h[0] == Rational(1));
    CHECK(h[1] == Rational(3, 2));
    CHECK(h[2] == Rational(7381, 2520));
    CHECK(h[3].to_double() == doctest::Approx(7.485470860550343).epsilon(1e-15));
    Rational naive;
    for (long long i = 1; i <= 1000; ++i) naive += Rational(1, i);
    CHECK(h[3] == naive);
  }

  TEST_CASE("sum of a span") {
    std::vector<Rational> terms{Rational(1, 2), Rational(1, 3), Rational(-5, 6)};
    CHECK(arith::exact_sum(terms) == Rational(0));
    CHECK(arith::exact_sum(std::span<const Rational>{}) == Rational(0));
  }
}
