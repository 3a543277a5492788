#include <random>

#include "arith/rational.hpp"
#include "doctest.h"

using arith::Rational;

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational(-3, 9).to_string() == "-1/3");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  }

  TEST_CASE("parse") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-1.5") == Rational(-3, 2));
    CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse(""));
  }

  TEST_CASE("promotion past 64 bits and demotion back") {
    Rational big(1);
    for (int i = 0; i < 5; ++i) big *= Rational(std::int64_t{1} << 40);
    CHECK_FALSE(big.is_small());
    CHECK(big.to_string() == "1606938044258990275541962092341162602522202993782792835301376");
    Rational back = big;
    for (int i = 0; i < 5; ++i) back /= Rational(std::int64_t{1} << 40);
    CHECK(back.is_small());
    CHECK(back == Rational(1));
  }

  TEST_CASE("arithmetic agrees with GMP on random operands") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> wide(-(std::int64_t{1} << 62), std::int64_t{1} << 62);
    std::uniform_int_distribution<std::int64_t> narrow(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
      const bool big_operands = i % 2 == 0;
      auto draw = [&] { return big_operands ? wide(rng) : narrow(rng); };
      std::int64_t an = draw(), ad = draw(), bn = draw(), bd = draw();
      if (ad == 0) ad = 1;
      if (bd == 0) bd = 3;
      Rational a(an, ad), b(bn, bd);
      mpq_class qa = a.to_mpq(), qb = b.to_mpq();
      CHECK(a + b == Rational(mpq_class(qa + qb)));
      CHECK(a - b == Rational(mpq_class(qa - qb)));
      CHECK(a * b == Rational(mpq_class(qa * qb)));
      if (!b.is_zero()) CHECK(a / b == Rational(mpq_class(qa / qb)));
      CHECK((a < b) == (qa < qb));
    }
  }

  TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(-5, 2).abs() == Rational(5, 2));
    CHECK(Rational(-5, 2).sign() == -1);
    CHECK(Rational(5, 2).reciprocal() == Rational(2, 5));
  }
}
