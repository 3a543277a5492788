#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arith/density/empirical.hpp"
#include "arith/density/euler_product.hpp"
#include "arith/pairs/mean_value.hpp"
#include "arith/pairs/nu_pair.hpp"

namespace arith::pairs {

/// Engineering slack on density comparisons; no convergence rate is known.
inline constexpr double kDefaultDensitySlack = 0.01;

/// d(supp g) >= C_nu / sum_{n in supp f} 1/n, checked at a finite x.
struct DensityBoundReport {
  density::DensityEstimate empirical;  // supp(g) up to x
  density::EulerProductResult c_nu;
  double support_sum_table = 0.0;  // sum over supp(f) ∩ [1, N]
  double support_sum_tail = 0.0;   // declared tail beyond N
  double bound = 0.0;              // c_nu / (table + tail)
  double margin = 0.0;             // empirical - bound
  double slack = kDefaultDensitySlack;
  bool holds = false;              // margin >= -slack
};

/// Requires a multiplicative (spec-backed) f, else NotMultiplicative, and a
/// declared f support tail, else HypothesisError.
DensityBoundReport verify_density_lower_bound(const NuPair& pair, std::uint64_t prime_cutoff, std::uint64_t x,
                                              double slack = kDefaultDensitySlack);

/// Partial 1/n sums over supp(f) and supp(g), and, when one side is
/// declared thin, growth diagnostics for the other side.
struct UncertaintyReport {
  enum class ThinSide { kNone, kF, kG };

  std::vector<density::ThinnessApproxPoint> f_sums;
  std::vector<density::ThinnessApproxPoint> g_sums;
  ThinSide thin_side = ThinSide::kNone;

  // diagnostics for the side that is not declared thin
  double density_last = 0.0;      // count(x)/x at the last checkpoint
  double density_previous = 0.0;  // at the checkpoint one decade earlier
  bool density_stable = true;     // density_last >= stability_ratio * density_previous
  std::vector<double> decade_growth;  // sum(10x) - sum(x) for each decade pair
  double growth_floor = 0.0;          // growth_fraction * density_last * ln 10
  bool growth_ok = true;
  double stability_ratio = 0.9;
  double growth_fraction = 0.5;

  bool consistent() const { return density_stable && growth_ok; }
};

/// Throws HypothesisError when both supports are declared thin (no nonzero
/// pair can have that). The ladder must contain at least one decade pair
/// (x, 10x) for the growth check to be meaningful.
UncertaintyReport uncertainty_report(const NuPair& pair, std::span<const std::uint64_t> checkpoints,
                                     double stability_ratio = 0.9, double growth_fraction = 0.5);

struct DriftCheck {
  std::uint64_t y_low;
  std::uint64_t y_high;
  double difference;  // |lambda_high - lambda_low|
  double bound;       // sup|nu| * sum_{y_low < d <= y_high} |f(d)|/d
  bool holds;
  std::optional<Rational> exact_difference;
  std::optional<Rational> exact_bound;
};

/// n whose only divisor from supp(f) is d = min supp(f) and with
/// nu(n/d) != 0 satisfy |g(n)| = |f(d)| |nu(n/d)| >= |f(d)| delta.
struct PositivityWitness {
  std::uint64_t d;
  double abs_f_d;
  double delta;
  double density;  // of that set of n up to x
  double value;    // abs_f_d * delta * density
};

struct MeanValueConvergenceReport {
  std::uint64_t x = 0;
  double sup_nu = 0.0;  // max |nu(n)| on [1, N]
  double delta = 0.0;   // min |nu(n)| over supp(nu) ∩ [1, N]
  std::vector<std::uint64_t> y_grid;
  std::vector<MeanValuePoint> lambdas;  // mean of |g_y| at x, per grid point
  std::vector<DriftCheck> drifts;       // adjacent grid pairs
  std::optional<PositivityWitness> witness;

  bool drift_ok() const;
};

/// lambda_y at x for each y in the grid with the triangle-inequality drift
/// bound between adjacent grid points. Refuses a nu declared unbounded and
/// an f whose weighted tail sum |f(n)|/n is undeclared.
MeanValueConvergenceReport verify_mean_value_convergence(const NuPair& pair, std::span<const std::uint64_t> y_grid,
                                                         std::uint64_t x);

/// Count of n <= x with {e in supp f : e | n} = {d} and nu(n/d) != 0.
std::uint64_t single_divisor_witness_count(const NuPair& pair, std::uint64_t d, std::uint64_t x);

}  // namespace arith::pairs
