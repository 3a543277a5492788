#include "arith/pairs/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arith/convolution.hpp"
#include "arith/errors.hpp"
#include "arith/exact_sum.hpp"

namespace arith::pairs {

DensityBoundReport verify_density_lower_bound(const NuPair& pair, std::uint64_t prime_cutoff, std::uint64_t x,
                                              double slack) {
  if (!pair.f_spec) {
    throw NotMultiplicative(
        "the C_nu lower bound needs a multiplicative f; for non-multiplicative f (e.g. the indicator of {d}) "
        "it fails: d(supp g) <= 1/d while sum 1/n = 1/d forces C_nu <= 1/d^2");
  }
  DensityBoundReport out;
  out.slack = slack;
  out.support_sum_tail = pair.f_support_tail.tail_value("sum of 1/n over supp(f)");
  long double table = 0.0L;
  const auto f_support = pair.f.support();
  for (auto n : f_support.members()) table += 1.0L / n;
  out.support_sum_table = static_cast<double>(table);
  out.c_nu = density::c_nu_constant(pair.nu_spec, prime_cutoff, pair.f.zero_test());
  out.bound = out.c_nu.value / (out.support_sum_table + out.support_sum_tail);
  out.empirical = density::empirical_density(pair.g.support(), x, density::decade_checkpoints(x));
  out.margin = out.empirical.approx() - out.bound;
  out.holds = out.margin >= -slack;
  return out;
}

UncertaintyReport uncertainty_report(const NuPair& pair, std::span<const std::uint64_t> checkpoints,
                                     double stability_ratio, double growth_fraction) {
  const bool f_thin = pair.f_support_tail.known();
  const bool g_thin = pair.g_support_tail.known();
  if (f_thin && g_thin) {
    throw HypothesisError("both supp(f) and supp(g) are declared thin; a nonzero nu-pair cannot have that");
  }
  UncertaintyReport out;
  out.stability_ratio = stability_ratio;
  out.growth_fraction = growth_fraction;
  const auto f_support = pair.f.support();
  const auto g_support = pair.g.support();
  out.f_sums = density::thinness_partial_sum_approx(f_support, checkpoints);
  out.g_sums = density::thinness_partial_sum_approx(g_support, checkpoints);
  out.thin_side = f_thin ? UncertaintyReport::ThinSide::kF
                         : (g_thin ? UncertaintyReport::ThinSide::kG : UncertaintyReport::ThinSide::kNone);
  if (out.thin_side == UncertaintyReport::ThinSide::kNone) return out;

  const auto& other = out.thin_side == UncertaintyReport::ThinSide::kF ? out.g_sums : out.f_sums;
  const auto ratio = [](const density::ThinnessApproxPoint& p) { return static_cast<double>(p.count) / p.x; };
  out.density_last = ratio(other.back());
  out.density_previous = out.density_last;
  for (const auto& p : other) {
    if (p.x * 10 == other.back().x) out.density_previous = ratio(p);
  }
  out.density_stable = out.density_last > 0.0 && out.density_last >= stability_ratio * out.density_previous;
  out.growth_floor = growth_fraction * out.density_last * std::numbers::ln10;
  for (const auto& lo : other) {
    for (const auto& hi : other) {
      if (hi.x == lo.x * 10) {
        const double growth = hi.sum - lo.sum;
        out.decade_growth.push_back(growth);
        out.growth_ok = out.growth_ok && growth >= out.growth_floor;
      }
    }
  }
  return out;
}

bool MeanValueConvergenceReport::drift_ok() const {
  return std::all_of(drifts.begin(), drifts.end(), [](const DriftCheck& d) { return d.holds; });
}

std::uint64_t single_divisor_witness_count(const NuPair& pair, std::uint64_t d, std::uint64_t x) {
  const auto f_support = pair.f.truncated(std::min(x, pair.limit())).support().members();
  std::vector<bool> other_divisor(x + 1, false);
  for (auto e : f_support) {
    if (e == d) continue;
    for (std::uint64_t n = e; n <= x; n += e) other_divisor[n] = true;
  }
  std::uint64_t count = 0;
  for (std::uint64_t m = 1; d * m <= x; ++m) {
    if (!other_divisor[d * m] && !pair.nu.is_zero_at(m)) ++count;
  }
  return count;
}

MeanValueConvergenceReport verify_mean_value_convergence(const NuPair& pair, std::span<const std::uint64_t> y_grid,
                                                         std::uint64_t x) {
  if (pair.nu_spec.growth == Growth::kUnbounded) {
    throw HypothesisError("nu '" + pair.nu_spec.name +
                          "' is declared unbounded; the mean value of |g| need not exist without a bounded nu");
  }
  (void)pair.f_weighted_tail.tail_value("sum of |f(n)|/n");
  if (x == 0 || x > pair.limit()) throw RangeError("mean value limit x outside [1, N]");
  if (y_grid.empty()) throw SpecError("empty y grid");

  MeanValueConvergenceReport out;
  out.x = x;
  out.y_grid.assign(y_grid.begin(), y_grid.end());
  std::sort(out.y_grid.begin(), out.y_grid.end());
  out.y_grid.erase(std::unique(out.y_grid.begin(), out.y_grid.end()), out.y_grid.end());

  const bool exact = pair.f.is_exact();
  std::optional<Rational> sup_exact;
  out.delta = INFINITY;
  for (std::uint64_t n = 1; n <= pair.limit(); ++n) {
    const Value v = pair.nu.at(n);
    if (exact) {
      Rational a = v.rational().abs();
      if (!sup_exact || a > *sup_exact) sup_exact = a;
    }
    out.sup_nu = std::max(out.sup_nu, v.magnitude());
    if (!pair.nu.is_zero_at(n)) out.delta = std::min(out.delta, v.magnitude());
  }

  const std::uint64_t ladder[] = {x};
  for (auto y : out.y_grid) {
    ArithFunc g_y = convolve_truncated(pair.f, pair.nu, y);
    out.lambdas.push_back(mean_value_series(g_y, ladder, y).points.back());
  }

  for (std::size_t i = 1; i < out.y_grid.size(); ++i) {
    const std::uint64_t lo = out.y_grid[i - 1];
    const std::uint64_t hi = std::min(out.y_grid[i], pair.limit());
    DriftCheck check{out.y_grid[i - 1], out.y_grid[i], 0.0, 0.0, false, std::nullopt, std::nullopt};
    if (exact) {
      std::vector<Rational> weights;
      for (std::uint64_t d = lo + 1; d <= hi; ++d) {
        const Rational& fd = pair.f.exact_values()[d - 1];
        if (!fd.is_zero()) weights.push_back(fd.abs() / Rational(d));
      }
      Rational bound = *sup_exact * exact_sum(weights);
      Rational diff = (*out.lambdas[i].exact - *out.lambdas[i - 1].exact).abs();
      check.holds = diff <= bound;
      check.difference = diff.to_double();
      check.bound = bound.to_double();
      check.exact_difference = std::move(diff);
      check.exact_bound = std::move(bound);
    } else {
      long double weight = 0.0L;
      for (std::uint64_t d = lo + 1; d <= hi; ++d) weight += std::abs(pair.f.floating_values()[d - 1]) / d;
      check.bound = out.sup_nu * static_cast<double>(weight);
      check.difference = std::abs(out.lambdas[i].mean - out.lambdas[i - 1].mean);
      // both sides carry rounding of order 1e-15 relative
      check.holds = check.difference <= check.bound * (1 + 1e-12) + 1e-15;
    }
    out.drifts.push_back(std::move(check));
  }

  const auto d_min = pair.f.support().min();
  if (d_min && std::isfinite(out.delta) && out.delta > 0.0 && *d_min <= x) {
    PositivityWitness w{};
    w.d = *d_min;
    w.abs_f_d = pair.f.at(w.d).magnitude();
    w.delta = out.delta;
    w.density = static_cast<double>(single_divisor_witness_count(pair, w.d, x)) / static_cast<double>(x);
    w.value = w.abs_f_d * w.delta * w.density;
    out.witness = w;
  }
  if (!std::isfinite(out.delta)) out.delta = 0.0;
  return out;
}

}  // namespace arith::pairs
