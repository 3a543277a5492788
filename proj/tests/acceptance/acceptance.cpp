// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "arith/builtins.hpp"
#include "arith/convolution.hpp"
#include "arith/density/empirical.hpp"
#include "arith/density/euler_product.hpp"
#include "arith/density/residue_sieve.hpp"
#include "arith/pairs/classify.hpp"
#include "arith/pairs/mean_value.hpp"
#include "arith/pairs/nu_pair.hpp"
#include "arith/pairs/verification.hpp"
#include "oracles/oracles.hpp"

using namespace arith;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kSixOverPi2 = 0.60792710185402662866;
constexpr double kThreeOverPi2 = 0.30396355092701331433;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string num(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

MultiplicativeSpec powers_of_two() {
  return {"pow2", [](std::uint64_t p, unsigned) { return Value(p == 2 ? 1 : 0); },
          UnsupportedPrimeTail::divergent(), Growth::kBounded};
}

ArithFunc one_two_table(std::uint64_t n) {
  std::vector<Rational> v(n);
  v[0] = Rational(1);
  if (n >= 2) v[1] = Rational(1);
  return ArithFunc::exact(std::move(v));
}

// sum_{n > N, n = 2^k} 1/n
double powers_of_two_tail(std::uint64_t n) {
  std::uint64_t next = 1;
  while (next <= n) next *= 2;
  return 2.0 / static_cast<double>(next);
}

// Plain sieve of Eratosthenes, independent of the library's prime code.
double prime_square_sum(std::uint64_t lo, std::uint64_t hi) {
  std::vector<bool> composite(hi + 1, false);
  long double s = 0;
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i > lo) s += 1.0L / (static_cast<long double>(i) * static_cast<long double>(i));
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return static_cast<double>(s);
}

pairs::PairOptions thin_f(pairs::TailDeclaration tail) {
  pairs::PairOptions o;
  o.f_support_tail = tail;
  o.f_weighted_tail = tail;
  return o;
}

// ---------------------------------------------------------------------------

Outcome exact_identities() {
  Outcome o;
  const auto t0 = Clock::now();
  constexpr std::uint64_t n = 100000;
  auto mu = tabulate(builtins::mobius(), n);
  auto one = tabulate(builtins::one(), n);
  o.require(convolve(mu, one) == tabulate(builtins::epsilon(), n), "mu * 1 == epsilon");
  o.require(dirichlet_inverse(one) == mu, "inverse(1) == mu");

  std::mt19937_64 rng(20240601);
  int roundtrips = 0;
  for (int i = 0; i < 20; ++i) {
    auto f = ArithFunc::exact(oracle::random_table(rng, n, false));
    if (mobius_transform(dirichlet_transform(f)) == f && dirichlet_transform(mobius_transform(f)) == f) ++roundtrips;
  }
  o.require(roundtrips == 20, "Moebius roundtrip " + std::to_string(roundtrips) + "/20");

  auto f = ArithFunc::exact(oracle::random_table(rng, 10000, false));
  auto g = ArithFunc::exact(oracle::random_table(rng, 10000, false));
  o.require(oracle::values(convolve(f, g)) == oracle::convolve_naive(oracle::values(f), oracle::values(g)),
            "fast == naive at N=10^4");
  const double secs = seconds_since(t0);
  o.require(secs < 10.0, "runtime " + num(secs, 3) + " s >= 10 s");
  o.note("N=10^5, 20/20 roundtrips, " + num(secs, 3) + " s");
  return o;
}

Outcome squarefree_density() {
  Outcome o;
  const auto t0 = Clock::now();
  auto mu = tabulate(builtins::mobius(), 1000000);
  auto emp = density::empirical_density(mu.support(), 1000000);
  auto euler = density::euler_product_support_density(builtins::mobius(), 100000);
  const double secs = seconds_since(t0);

  const double emp_err = std::abs(emp.approx() - kSixOverPi2);
  const double euler_err = std::abs(euler.value - kSixOverPi2);
  // primes in (10^5, 10^7] give a lower bound for the full tail sum
  const double tail_lower = prime_square_sum(100000, 10000000);
  o.require(emp_err <= 2e-3, "empirical off by " + num(emp_err));
  o.require(euler_err <= 1e-4, "Euler product off by " + num(euler_err));
  o.require(euler.error_bound <= tail_lower, "certificate " + num(euler.error_bound) + " > tail sum " + num(tail_lower));
  o.require(euler.lower() <= kSixOverPi2 && kSixOverPi2 <= euler.upper(), "certificate interval misses 6/pi^2");
  o.require(secs < 5.0, "runtime " + num(secs, 3) + " s >= 5 s");
  o.note("empirical " + num(emp.approx(), 8) + ", Euler " + num(euler.value, 10) + " +- " + num(euler.error_bound, 3) +
         " (tail sum >= " + num(tail_lower, 3) + "), " + num(secs, 3) + " s");
  return o;
}

Outcome sieve_exactness() {
  Outcome o;
  constexpr std::uint64_t x = 100000;
  // Moduli divide x, so the brute count over [1, x] covers whole periods.
  const std::vector<std::uint64_t> moduli{2, 4, 5, 8, 10, 16, 20, 25, 32, 40, 50, 80, 100};
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, moduli.size() - 1);
  double worst = 0.0;
  int sieve_ok = 0, multiples_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    density::ResidueSieveSpec spec;
    std::vector<std::pair<std::uint64_t, std::set<std::uint64_t>>> brute;
    const int k = 1 + trial % 5;
    for (int i = 0; i < k; ++i) {
      const auto b = moduli[pick(rng)];
      std::uniform_int_distribution<std::uint64_t> res(0, b - 1);
      std::set<std::uint64_t> omega;
      for (int j = 0; j < 1 + trial % 3; ++j) omega.insert(res(rng));
      spec.entries.push_back({b, {omega.begin(), omega.end()}});
      brute.emplace_back(b, omega);
    }
    const double exact = density::sieved_density_exact(spec).to_double();
    const double observed = static_cast<double>(oracle::brute_sieve_count(brute, x)) / x;
    worst = std::max(worst, std::abs(exact - observed) * x / k);
    sieve_ok += std::abs(exact - observed) <= 2.0 * k / x;

    std::vector<std::uint64_t> a;
    for (int i = 0; i < k; ++i) a.push_back(moduli[pick(rng)] + (trial % 2 ? 0 : 1));
    const double m = density::multiples_density(a).to_double();
    std::uint64_t period = 1;
    for (auto v : a) period = std::lcm(period, v);
    const double m_obs = static_cast<double>(oracle::brute_multiples_count(a, x)) / x;
    // odd trials use moduli dividing x; even trials shift them off that lattice
    const double tol = 2.0 * static_cast<double>(a.size()) / x;
    if (x % period == 0) {
      multiples_ok += std::abs(m - m_obs) <= tol;
    } else {
      const double full = static_cast<double>(oracle::brute_multiples_count(a, period)) / static_cast<double>(period);
      multiples_ok += m == full;
    }
  }
  o.require(sieve_ok == 100, "sieve " + std::to_string(sieve_ok) + "/100");
  o.require(multiples_ok == 100, "multiples " + std::to_string(multiples_ok) + "/100");

  density::ResidueSieveSpec two_three{{{2, {0}}, {3, {0}}}, std::nullopt, std::nullopt};
  const std::vector<std::uint64_t> a23{2, 3};
  o.require(density::sieved_density_exact(two_three) == Rational(1, 3), "sieve {2,3} != 1/3");
  o.require(density::multiples_density(a23) == Rational(2, 3), "multiples {2,3} != 2/3");
  o.note("100/100 sieves, 100/100 multiples, closed cases exact");
  return o;
}

Outcome density_bound() {
  Outcome o;
  constexpr std::uint64_t n = 1000000;
  auto eps = pairs::make_pair(builtins::epsilon(), builtins::mobius(), n, ValueMode::kExact,
                              thin_f(pairs::TailDeclaration::finite()));
  auto r1 = pairs::verify_density_lower_bound(eps, 100000, n, 0.01);
  o.require(r1.holds, "(eps, mu) margin " + num(r1.margin));

  auto pow2 = pairs::make_pair(powers_of_two(), builtins::mobius(), n, ValueMode::kExact,
                               thin_f(pairs::TailDeclaration::bounded(powers_of_two_tail(n))));
  auto r2 = pairs::verify_density_lower_bound(pow2, 100000, n, 0.01);
  o.require(r2.holds, "(pow2, mu) margin " + num(r2.margin));
  o.require(std::abs(r2.bound - kThreeOverPi2) <= 1e-9, "pow2 bound " + num(r2.bound, 10) + " != 3/pi^2");
  o.note("(eps,mu) " + num(r1.empirical.approx()) + " vs " + num(r1.bound) + "; (pow2,mu) " +
         num(r2.empirical.approx()) + " vs " + num(r2.bound) + ", slack 0.01");
  return o;
}

Outcome mean_value_convergence() {
  Outcome o;
  constexpr std::uint64_t n = 1000000;
  const std::vector<std::uint64_t> grid{1, 10, 100, 1000, 10000};
  auto eps = pairs::make_pair(builtins::epsilon(), builtins::mobius(), n, ValueMode::kExact,
                              thin_f(pairs::TailDeclaration::finite()));
  auto r = pairs::verify_mean_value_convergence(eps, grid, n);
  double worst = 0;
  for (const auto& l : r.lambdas) worst = std::max(worst, std::abs(l.mean - kSixOverPi2));
  o.require(worst <= 2e-3, "lambda_y off by " + num(worst));
  o.require(r.drift_ok(), "drift bound for (eps, mu)");
  o.require(r.witness && r.witness->value > 0, "witness for (eps, mu)");

  auto one_two = pairs::make_pair(one_two_table(n), builtins::mobius(), n, thin_f(pairs::TailDeclaration::finite()));
  auto r2 = pairs::verify_mean_value_convergence(one_two, grid, n);
  o.require(r2.drift_ok(), "drift bound for supp(f) = {1,2}");
  o.require(r2.witness && r2.witness->value > 0, "witness for supp(f) = {1,2}");
  o.note("max |lambda_y - 6/pi^2| " + num(worst, 3) + ", drift " + num(r2.drifts[0].difference) + " <= " +
         num(r2.drifts[0].bound) + ", witnesses " + num(r.witness->value) + ", " + num(r2.witness->value));
  return o;
}

Outcome remark_counterexamples() {
  Outcome o;
  constexpr std::uint64_t n = 100000;
  const std::vector<std::uint64_t> ladder{1000, 10000, 100000};
  auto id = pairs::make_pair(builtins::epsilon(), builtins::identity(), n);
  auto s = pairs::mean_value_series(id.g, ladder);
  const Rational ratio = *s.points.back().exact / *s.points.front().exact;
  o.require(s.trend() == pairs::MeanTrend::kIncreasingUnbounded, "id series not flagged unbounded");
  o.require(ratio > Rational(100), "id ratio " + ratio.to_string() + " = " + num(ratio.to_double()) + " not > 100");

  auto recip = pairs::make_pair(builtins::epsilon(), builtins::reciprocal_identity(), n);
  auto s2 = pairs::mean_value_series(recip.g, density::decade_checkpoints(n));
  for (const auto& pt : s2.points) {
    const double x = static_cast<double>(pt.x);
    o.require(pt.mean <= 15.0 * std::log(x) / x, "recip mean above 15 log x / x at x=" + std::to_string(pt.x));
  }
  o.require(s2.trend() == pairs::MeanTrend::kDecayingToZero, "recip series not flagged decaying");
  o.note("id ratio " + ratio.to_string() + " ~ " + num(ratio.to_double()) + ", recip mean at 10^5 " +
         num(s2.points.back().mean));
  return o;
}

Outcome class_decomposition() {
  Outcome o;
  constexpr std::uint64_t n = 100000;
  auto pair = pairs::make_pair(one_two_table(n), builtins::mobius(), n);
  const std::vector<std::uint64_t> ladder{50000, 100000};
  auto dec = pairs::classify_support(pair, ladder);
  auto naive = oracle::naive_classify([](std::uint64_t d) { return d <= 2; },
                                      [](std::uint64_t m) { return oracle::mobius(m) != 0; }, n);
  bool same = dec.classes.size() == naive.size();
  std::size_t i = 0;
  for (const auto& [key, count] : naive) {
    if (!same) break;
    const auto& c = dec.classes[i++];
    same = c.divisors == key.s && c.active == key.t && c.counts.back().count == count;
  }
  o.require(same, "class counts differ from naive classifier");
  double drift = 0;
  for (const auto& c : dec.classes) drift = std::max(drift, std::abs(c.density_at(1) - c.density_at(0)));
  o.require(drift <= 0.005, "class density drift " + num(drift));
  o.note(std::to_string(dec.classes.size()) + " classes match naive, max drift " + num(drift, 3));
  return o;
}

Outcome uncertainty_diagnostic() {
  Outcome o;
  constexpr std::uint64_t n = 1000000;
  const std::vector<std::uint64_t> ladder{10000, 100000, 1000000};
  struct Case {
    std::string name;
    std::function<pairs::NuPair()> build;
  };
  std::vector<Case> cases{
      {"(eps,mu)",
       [] {
         return pairs::make_pair(builtins::epsilon(), builtins::mobius(), n, ValueMode::kExact,
                                 thin_f(pairs::TailDeclaration::finite()));
       }},
      {"(pow2,mu)",
       [] {
         return pairs::make_pair(powers_of_two(), builtins::mobius(), n, ValueMode::kExact,
                                 thin_f(pairs::TailDeclaration::bounded(powers_of_two_tail(n))));
       }},
      {"({1,2},mu)",
       [] { return pairs::make_pair(one_two_table(n), builtins::mobius(), n, thin_f(pairs::TailDeclaration::finite())); }},
      {"(eps,squarefree)",
       [] {
         return pairs::make_pair(builtins::epsilon(), builtins::squarefree_indicator(), n, ValueMode::kExact,
                                 thin_f(pairs::TailDeclaration::finite()));
       }},
      {"(1,mu) g thin",
       [] {
         pairs::PairOptions opts;
         opts.g_support_tail = pairs::TailDeclaration::finite();
         return pairs::make_pair(builtins::one(), builtins::mobius(), n, ValueMode::kExact, opts);
       }},
  };
  std::string summary;
  for (const auto& c : cases) {
    auto u = pairs::uncertainty_report(c.build(), ladder);
    o.require(u.density_stable, c.name + " density " + num(u.density_last) + " vs " + num(u.density_previous));
    o.require(u.growth_ok, c.name + " growth below " + num(u.growth_floor));
    double min_growth = INFINITY;
    for (double g : u.decade_growth) min_growth = std::min(min_growth, g);
    summary += (summary.empty() ? "" : ", ") + c.name + " d=" + num(u.density_last, 4) + " growth>=" +
               num(min_growth, 4) + "/" + num(u.growth_floor, 4);
  }
  o.note(summary);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "exact identities at N=10^5", exact_identities},
      {2, "squarefree density and Euler product", squarefree_density},
      {3, "sieved and multiples densities vs brute force", sieve_exactness},
      {4, "support density lower bound C_nu / sum 1/n", density_bound},
      {5, "mean value lambda_y, drift bound, positivity witness", mean_value_convergence},
      {6, "mean value counterexamples nu = id and nu = 1/n", remark_counterexamples},
      {7, "class decomposition vs naive classifier", class_decomposition},
      {8, "thin support forces a dense partner", uncertainty_diagnostic},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
