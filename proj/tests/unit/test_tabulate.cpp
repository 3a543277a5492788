#include <random>

#include "arith/builtins.hpp"
#include "arith/errors.hpp"
#include "arith/multiplicative.hpp"
#include "arith/prime_sieve.hpp"
#include "arith/table_csv.hpp"
#include "doctest.h"
#include "oracles/oracles.hpp"

using namespace arith;

namespace {

std::vector<Rational> ints(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int i : v) out.emplace_back(i);
  return out;
}

}  // namespace

TEST_SUITE("tabulate") {
  TEST_CASE("linear sieve smallest prime factors match trial division") {
    PrimeSieve sieve(20000);
    for (std::uint32_t n = 2; n <= 20000; ++n) {
      const auto f = oracle::trial_factor(n);
      REQUIRE(sieve.spf(n) == f.front().first);
      CHECK(sieve.spf_exponent(n) == f.front().second);
      CHECK(sieve.is_prime(n) == oracle::is_prime(n));
    }
    CHECK(sieve.primes().size() == 2262);
  }

  TEST_CASE("segmented prime range agrees with trial division") {
    auto ps = primes_in_range(1000, 5000);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 1001; n <= 5000; ++n) {
      if (oracle::is_prime(n)) expected.push_back(n);
    }
    CHECK(ps == expected);
  }

  TEST_CASE("builtin tables") {
    CHECK(oracle::values(tabulate(builtins::mobius(), 10)) == ints({1, -1, -1, 0, -1, 1, -1, 0, 0, 1}));
    CHECK(oracle::values(tabulate(builtins::one(), 5)) == ints({1, 1, 1, 1, 1}));
    CHECK(oracle::values(tabulate(builtins::epsilon(), 4)) == ints({1, 0, 0, 0}));
    CHECK(oracle::values(tabulate(builtins::identity(), 6)) == ints({1, 2, 3, 4, 5, 6}));
    CHECK(oracle::values(tabulate(builtins::liouville(), 8)) == ints({1, -1, -1, 1, -1, 1, -1, -1}));
    CHECK(tabulate(builtins::reciprocal_identity(), 12).at(12).rational() == Rational(1, 12));
  }

  TEST_CASE("mobius table matches factorization oracle") {
    auto mu = tabulate(builtins::mobius(), 100000);
    for (std::uint64_t n = 1; n <= 100000; n += 7) CHECK(mu.at(n).rational() == Rational(oracle::mobius(n)));
  }

  TEST_CASE("tabulation agrees with direct evaluation") {
    MultiplicativeSpec spec{"mixed",
                            [](std::uint64_t p, unsigned k) {
                              return Value(Rational(static_cast<long long>(p % 3) + 1, static_cast<long long>(k + 1)));
                            },
                            std::nullopt, Growth::kUnknown};
    auto table = tabulate(spec, 5000);
    for (std::uint64_t n = 1; n <= 5000; ++n) CHECK(table.at(n) == evaluate(spec, n));
  }

  TEST_CASE("floating mode converts exact rule values") {
    auto table = tabulate(builtins::reciprocal_identity(), 10, ValueMode::kFloating);
    CHECK(table.mode() == ValueMode::kFloating);
    CHECK(table.at(4).to_complex().real() == doctest::Approx(0.25));
  }

  TEST_CASE("rule failure names the prime power") {
    MultiplicativeSpec bad{"bad",
                           [](std::uint64_t p, unsigned k) -> Value {
                             if (p == 3 && k == 2) throw std::runtime_error("boom");
                             return Value(1);
                           },
                           std::nullopt, Growth::kUnknown};
    try {
      tabulate(bad, 20);
      FAIL("expected RuleError");
    } catch (const RuleError& e) {
      CHECK(e.prime() == 3);
      CHECK(e.exponent() == 2);
    }
    MultiplicativeSpec floating_rule{"f", [](std::uint64_t, unsigned) { return Value(Complex(0.5, 0)); },
                                     std::nullopt, Growth::kUnknown};
    CHECK_THROWS_AS(tabulate(floating_rule, 5, ValueMode::kExact), RuleError);
  }

  TEST_CASE("support and zero thresholds") {
    auto mu = tabulate(builtins::mobius(), 10);
    CHECK(mu.support().members() == std::vector<std::uint64_t>{1, 2, 3, 5, 6, 7, 10});
    CHECK(tabulate(builtins::epsilon(), 5).support().members() == std::vector<std::uint64_t>{1});
    CHECK(ArithFunc::zero(6).support().empty());
    CHECK_FALSE(mu.support().threshold().has_value());

    auto f = ArithFunc::floating({Complex(1, 0), Complex(1e-13, 0), Complex(1e-9, 0), Complex(0, 2)});
    auto s = f.support();
    CHECK(s.members() == std::vector<std::uint64_t>{1, 3, 4});
    REQUIRE(s.threshold().has_value());
    CHECK(s.threshold()->tau == 1e-12);

    auto rel = f.with_zero_test({ZeroTest::Rule::kRelative, 1e-6}).support();
    CHECK(rel.members() == std::vector<std::uint64_t>{1, 4});
    CHECK(rel.threshold()->to_string() == "rel:1e-06");
  }

  TEST_CASE("csv rendering") {
    CHECK(table_csv(tabulate(builtins::epsilon(), 3)) == "n,value\n1,1\n2,0\n3,0\n");
    CHECK(table_csv(tabulate(builtins::reciprocal_identity(), 2)) == "n,value\n1,1\n2,1/2\n");
    std::istringstream in("n,value\n2,1/3\n5,-2\n");
    auto t = read_table_csv(in, ValueMode::kExact, 6);
    CHECK(oracle::values(t) == std::vector<Rational>{0, Rational(1, 3), 0, 0, -2, 0});
    std::istringstream bad("1,x\n");
    CHECK_THROWS_AS(read_table_csv(bad, ValueMode::kExact), SpecError);
  }

  TEST_CASE("floating values round-trip through text") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 200; ++i) {
      Value v(Complex(u(rng), i % 2 ? u(rng) : 0.0));
      CHECK(Value::parse(v.to_string(), ValueMode::kFloating) == v);
    }
  }
}
