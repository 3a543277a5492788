#include <benchmark/benchmark.h>

#include <vector>

#include "arith/builtins.hpp"
#include "arith/convolution.hpp"
#include "arith/density/euler_product.hpp"
#include "arith/density/residue_sieve.hpp"
#include "arith/multiplicative.hpp"
#include "arith/prime_sieve.hpp"

using namespace arith;

namespace {

void BM_LinearSieve(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    PrimeSieve s(n);
    benchmark::DoNotOptimize(s.primes().size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LinearSieve)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 23);

void BM_TabulateMobius(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto mode = state.range(1) ? ValueMode::kFloating : ValueMode::kExact;
  for (auto _ : state) benchmark::DoNotOptimize(tabulate(builtins::mobius(), n, mode));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TabulateMobius)->Args({1 << 16, 0})->Args({1 << 20, 0})->Args({1 << 20, 1});

// Mertens-style workload: mu * 1 over [1, N].
void BM_ConvolveExact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  auto mu = tabulate(builtins::mobius(), n);
  auto one = tabulate(builtins::one(), n);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(mu, one));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConvolveExact)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

// Rational values with wide denominators force the general rational path.
void BM_ConvolveExactGeneral(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  auto f = tabulate(builtins::reciprocal_identity(), n);
  auto mu = tabulate(builtins::mobius(), n);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, mu));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConvolveExactGeneral)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_ConvolveFloating(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  auto f = tabulate(builtins::reciprocal_identity(), n, ValueMode::kFloating);
  auto mu = tabulate(builtins::mobius(), n, ValueMode::kFloating);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, mu));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConvolveFloating)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

// Per-n divisor enumeration, the baseline the d*m loop replaces.
void BM_ConvolveNaive(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  auto mu = tabulate(builtins::mobius(), n);
  auto one = tabulate(builtins::one(), n);
  auto f = mu.exact_values();
  auto g = one.exact_values();
  for (auto _ : state) {
    std::vector<Rational> out(n);
    for (std::uint64_t k = 1; k <= n; ++k) {
      Rational acc;
      for (std::uint64_t d = 1; d * d <= k; ++d) {
        if (k % d) continue;
        acc += f[d - 1] * g[k / d - 1];
        if (d * d != k) acc += f[k / d - 1] * g[d - 1];
      }
      out[k - 1] = acc;
    }
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConvolveNaive)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

void BM_DirichletInverse(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  auto one = tabulate(builtins::one(), n);
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_inverse(one));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DirichletInverse)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_SievedDensity(benchmark::State& state) {
  density::ResidueSieveSpec spec;
  for (std::uint64_t p : {2, 3, 5, 7, 11}) spec.entries.push_back({p * p, {0}});
  for (std::uint64_t b : {8, 12, 18}) spec.entries.push_back({b, {1, 5}});
  for (auto _ : state) benchmark::DoNotOptimize(density::sieved_density_exact(spec));
}
BENCHMARK(BM_SievedDensity)->Unit(benchmark::kMillisecond);

void BM_EulerProduct(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(density::euler_product_support_density(builtins::mobius(), p));
}
BENCHMARK(BM_EulerProduct)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
