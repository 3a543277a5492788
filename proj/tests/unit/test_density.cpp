#include <cmath>
#include <random>
#include <sstream>

#include "arith/builtins.hpp"
#include "arith/density/empirical.hpp"
#include "arith/density/residue_sieve.hpp"
#include "arith/errors.hpp"
#include "arith/multiplicative.hpp"
#include "doctest.h"
#include "oracles/oracles.hpp"

using namespace arith;
using namespace arith::density;

namespace {

using BruteEntries = std::vector<std::pair<std::uint64_t, std::set<std::uint64_t>>>;

BruteEntries to_brute(const ResidueSieveSpec& spec) {
  BruteEntries out;
  for (const auto& e : spec.entries) out.emplace_back(e.modulus, std::set<std::uint64_t>(e.forbidden.begin(), e.forbidden.end()));
  return out;
}

std::uint64_t lcm_of(const ResidueSieveSpec& spec) {
  std::uint64_t l = 1;
  for (const auto& e : spec.entries) l = std::lcm(l, e.modulus);
  return l;
}

ResidueSieveSpec squares_of_primes(std::initializer_list<std::uint64_t> primes) {
  ResidueSieveSpec s;
  for (auto p : primes) s.entries.push_back({p * p, {0}});
  return s;
}

}  // namespace

TEST_SUITE("density") {
  TEST_CASE("checkpoint ladders") {
    CHECK(decade_checkpoints(1000) == std::vector<std::uint64_t>{10, 100, 1000});
    CHECK(decade_checkpoints(2500) == std::vector<std::uint64_t>{10, 100, 1000, 2500});
    std::vector<std::uint64_t> raw{50, 10, 50};
    CHECK(normalize_checkpoints(raw, 80) == std::vector<std::uint64_t>{10, 50, 80});
    std::vector<std::uint64_t> bad{0};
    CHECK_THROWS_AS(normalize_checkpoints(bad, 10), RangeError);
    std::vector<std::uint64_t> over{11};
    CHECK_THROWS_AS(normalize_checkpoints(over, 10), RangeError);
  }

  TEST_CASE("empirical density of the squarefree numbers") {
    auto est = empirical_density(oracle::squarefree, 100000);
    CHECK(est.checkpoints.back().count == 60794);
    CHECK(est.value == Rational(60794, 100000));
    CHECK(std::abs(est.approx() - kSixOverPiSquared) < 1e-3);
    CHECK(est.lower() <= est.approx());
    CHECK(est.upper() >= est.approx());

    auto mu = tabulate(builtins::mobius(), 100000);
    auto from_support = empirical_density(mu.support(), 100000);
    CHECK(from_support.value == est.value);
    CHECK_THROWS_AS(empirical_density(mu.support(), 100001), RangeError);
  }

  TEST_CASE("empirical density records the floating threshold") {
    auto mu = tabulate(builtins::mobius(), 1000, ValueMode::kFloating);
    auto est = empirical_density(mu.support(), 1000);
    REQUIRE(est.zero_threshold.has_value());
    CHECK(est.zero_threshold->tau == 1e-12);
  }

  TEST_CASE("single entry sieves") {
    ResidueSieveSpec evens{{{2, {0}}}, std::nullopt, std::nullopt};
    CHECK(sieved_density_exact(evens) == Rational(1, 2));
    ResidueSieveSpec two_of_three{{{3, {0, 1}}}, std::nullopt, std::nullopt};
    CHECK(sieved_density_exact(two_of_three) == Rational(1, 3));
    ResidueSieveSpec mod4{{{4, {0, 2}}}, std::nullopt, std::nullopt};
    CHECK(sieved_density_exact(mod4) == Rational(1, 2));
    ResidueSieveSpec empty;
    CHECK(sieved_density_exact(empty) == Rational(1));
    ResidueSieveSpec all{{{1, {0}}}, std::nullopt, std::nullopt};
    CHECK(sieved_density_exact(all) == Rational(0));
  }

  TEST_CASE("overlapping moduli") {
    // n odd and n not 1 mod 4 leaves n = 3 mod 4.
    ResidueSieveSpec s{{{2, {0}}, {4, {1}}}, std::nullopt, std::nullopt};
    CHECK(sieved_density_exact(s) == Rational(1, 4));
    // Contradictory constraints intersect to nothing and are pruned.
    ResidueSieveSpec t{{{2, {0}}, {2, {1}}, {6, {1}}}, std::nullopt, std::nullopt};
    CHECK(sieved_density_exact(t) == Rational(0));
  }

  TEST_CASE("random sieves agree with a full-period brute count") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::uint64_t> mod(1, 30);
    for (int trial = 0; trial < 60; ++trial) {
      ResidueSieveSpec spec;
      const int k = 1 + trial % 4;
      for (int i = 0; i < k; ++i) {
        ResidueClassEntry e{mod(rng), {}};
        std::uniform_int_distribution<std::uint64_t> res(0, e.modulus - 1);
        const int r = 1 + static_cast<int>(res(rng) % 3);
        for (int j = 0; j < r; ++j) e.forbidden.push_back(res(rng));
        spec.entries.push_back(e);
      }
      const std::uint64_t period = lcm_of(spec);
      if (period > 200000) continue;
      const auto count = oracle::brute_sieve_count(to_brute(spec), period);
      CHECK(sieved_density_exact(spec) == Rational(static_cast<long long>(count), static_cast<long long>(period)));
    }
  }

  TEST_CASE("truncated sieve over squares of primes") {
    auto spec = squares_of_primes({2, 3, 5, 7, 11, 13});
    spec.tail_constants = std::vector<double>{};
    for (const auto& e : spec.entries) spec.tail_constants->push_back(1.0 / static_cast<double>(e.modulus));
    spec.unlisted_tail = 0.0106;  // covers sum_{p >= 17} 1/p^2
    auto t = sieved_density_truncated(spec, 4);
    CHECK(t.density == Rational(768, 1225));
    CHECK(t.retained == 4);
    CHECK(t.tail_bound == doctest::Approx(1.0 / 121 + 1.0 / 169 + 0.0106));
    // The squarefree density lies inside the certified interval.
    CHECK(t.lower() <= 6.0 / (M_PI * M_PI));
    CHECK(t.upper() >= 6.0 / (M_PI * M_PI));
    // and so does the brute-force count of the full sieve.
    const double observed = static_cast<double>(oracle::brute_sieve_count(to_brute(spec), 100000)) / 100000.0;
    CHECK(observed >= t.lower() - 1e-3);
    CHECK(observed <= t.upper() + 1e-3);

    auto bare = squares_of_primes({2, 3, 5, 7, 11});
    CHECK_THROWS_AS(sieved_density_truncated(bare, 4), SpecError);
    CHECK(sieved_density_truncated(bare, 5).tail_bound == 0.0);
  }

  TEST_CASE("truncation is monotone in the retained count") {
    auto spec = squares_of_primes({2, 3, 5, 7, 11, 13});
    spec.tail_constants = std::vector<double>(6, 0.05);
    Rational prev(1);
    for (std::size_t r = 0; r <= 6; ++r) {
      auto t = sieved_density_truncated(spec, r);
      CHECK(t.density <= prev);
      prev = t.density;
    }
  }

  TEST_CASE("multiples densities") {
    std::vector<std::uint64_t> a{2, 3};
    CHECK(multiples_density(a) == Rational(2, 3));
    std::vector<std::uint64_t> b{3, 6, 9};
    CHECK(multiples_density(b) == Rational(1, 3));
    std::vector<std::uint64_t> with_one{1, 5};
    CHECK(multiples_density(with_one) == Rational(1));
    CHECK(multiples_density(std::span<const std::uint64_t>{}) == Rational(0));
    std::vector<std::uint64_t> zero{0, 2};
    CHECK_THROWS_AS(multiples_density(zero), SpecError);
  }

  TEST_CASE("multiples and complement sieve agree") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::uint64_t> u(2, 40);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::uint64_t> a;
      for (int i = 0; i < 1 + trial % 6; ++i) a.push_back(u(rng));
      const auto m = multiples_density(a);
      CHECK(m + sieved_density_exact(multiples_complement_sieve(a)) == Rational(1));
      std::uint64_t period = 1;
      for (auto v : a) period = std::lcm(period, v);
      if (period <= 300000) {
        CHECK(m == Rational(static_cast<long long>(oracle::brute_multiples_count(a, period)),
                            static_cast<long long>(period)));
      }
    }
  }

  TEST_CASE("caps raise complexity errors") {
    ResidueSieveSpec many;
    for (int i = 0; i < 21; ++i) many.entries.push_back({2, {0}});
    CHECK_THROWS_AS(sieved_density_exact(many), ComplexityError);
    ResidueSieveSpec wide{{{999999937, {0}}, {999999929, {0}}}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(sieved_density_exact(wide), ComplexityError);
    SieveLimits tight;
    tight.max_modulus = 10;
    ResidueSieveSpec s{{{3, {0}}, {5, {0}}}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(sieved_density_exact(s, tight), ComplexityError);
  }

  TEST_CASE("spec validation") {
    ResidueSieveSpec zero{{{0, {}}}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(zero.validate(), SpecError);
    ResidueSieveSpec out{{{3, {3}}}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(sieved_density_exact(out), SpecError);
    CHECK_THROWS_AS(parse_sieve_entry("5"), SpecError);
    CHECK_THROWS_AS(parse_sieve_entry("5:7"), SpecError);
    auto e = parse_sieve_entry("6:1|5");
    CHECK(e.modulus == 6);
    CHECK(e.forbidden == std::vector<std::uint64_t>{1, 5});
  }

  TEST_CASE("sieve csv round trip") {
    std::istringstream in("# squares\n# unlisted_tail=0.5\n4,0,0.25\n9,0,1/9\n");
    auto spec = read_sieve_csv(in);
    REQUIRE(spec.entries.size() == 2);
    REQUIRE(spec.tail_constants.has_value());
    CHECK((*spec.tail_constants)[1] == doctest::Approx(1.0 / 9));
    CHECK(*spec.unlisted_tail == 0.5);
    std::ostringstream os;
    write_sieve_csv(os, spec);
    std::istringstream again(os.str());
    auto spec2 = read_sieve_csv(again);
    CHECK(spec2.entries.size() == 2);
    CHECK(spec2.entries[1].modulus == 9);
    CHECK(*spec2.tail_constants == *spec.tail_constants);
    std::istringstream mixed("4,0,0.25\n9,0\n");
    CHECK_THROWS_AS(read_sieve_csv(mixed), SpecError);
  }

  TEST_CASE("thinness partial sums") {
    std::vector<std::uint64_t> powers;
    for (std::uint64_t v = 1; v <= (1u << 19); v *= 2) powers.push_back(v);
    std::vector<std::uint64_t> cut{1u << 19};
    auto pts = thinness_partial_sum(powers, cut);
    CHECK(pts.back().sum == Rational(2) - Rational(1, 1 << 19));
    CHECK(pts.back().count == 20);

    auto one = tabulate(builtins::one(), 1000);
    std::vector<std::uint64_t> ladder{10, 1000};
    auto h = thinness_partial_sum(one.support(), ladder);
    CHECK(h[0].sum == Rational(7381, 2520));
    CHECK(h[1].sum.to_double() == doctest::Approx(7.485470860550343).epsilon(1e-14));
    auto approx = thinness_partial_sum_approx(one.support(), ladder);
    CHECK(approx[1].sum == doctest::Approx(7.485470860550343).epsilon(1e-14));
  }
}
