#include "arith/pairs/nu_pair.hpp"

#include <stdexcept>

#include "arith/convolution.hpp"
#include "arith/errors.hpp"

namespace arith::pairs {

double TailDeclaration::tail_value(const std::string& what) const {
  switch (kind) {
    case Kind::kFinite:
      return 0.0;
    case Kind::kBounded:
      return bound;
    case Kind::kUnknown:
      break;
  }
  throw HypothesisError(what + ": tail beyond the table is undeclared (unknown); declare finite or bounded");
}

std::string TailDeclaration::to_string() const {
  switch (kind) {
    case Kind::kFinite:
      return "finite";
    case Kind::kBounded:
      return "bounded:" + format_double(bound);
    case Kind::kUnknown:
      break;
  }
  return "unknown";
}

namespace {

ArithFunc fit_to_limit(const ArithFunc& f, std::uint64_t limit) {
  if (f.limit() < limit) {
    throw RangeError("f is tabulated to " + std::to_string(f.limit()) + " < N = " + std::to_string(limit));
  }
  return f.limit() == limit ? f : f.truncated(limit);
}

}  // namespace

NuPair make_pair(const ArithFunc& f_in, const MultiplicativeSpec& nu_spec, std::uint64_t limit,
                 const PairOptions& options) {
  ArithFunc f = fit_to_limit(f_in, limit);
  if (f.support().empty()) {
    throw HypothesisError("f vanishes on [1, " + std::to_string(limit) +
                          "]; a nonzero pair needs a nonzero value inside the table");
  }
  ArithFunc nu = tabulate(nu_spec, limit, f.mode(), f.zero_test());
  ArithFunc g = convolve(f, nu);
  NuPair pair{std::move(f),          std::move(nu),          std::move(g),
              nu_spec,               std::nullopt,           options.f_support_tail,
              options.g_support_tail, options.f_weighted_tail};
  if (options.verify_roundtrip && pair.f.is_exact() && !roundtrip_holds(pair)) {
    throw std::logic_error("nu-pair roundtrip g * nu^-1 != f");
  }
  return pair;
}

NuPair make_pair(const MultiplicativeSpec& f_spec, const MultiplicativeSpec& nu_spec, std::uint64_t limit,
                 ValueMode mode, const PairOptions& options) {
  NuPair pair = make_pair(tabulate(f_spec, limit, mode), nu_spec, limit, options);
  pair.f_spec = f_spec;
  return pair;
}

bool roundtrip_holds(const NuPair& pair) {
  ArithFunc back = convolve(pair.g, dirichlet_inverse(pair.nu));
  if (pair.f.is_exact()) return back == pair.f;
  const auto a = back.floating_values();
  const auto b = pair.f.floating_values();
  const double tol = pair.f.zero_test().tau * std::max(1.0, pair.f.scale());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

ArithFunc truncated_convolution(const ArithFunc& f, const MultiplicativeSpec& nu_spec, std::uint64_t y,
                                std::uint64_t limit) {
  ArithFunc ff = fit_to_limit(f, limit);
  return convolve_truncated(ff, tabulate(nu_spec, limit, ff.mode(), ff.zero_test()), y);
}

ArithFunc truncated_convolution(const NuPair& pair, std::uint64_t y) {
  return convolve_truncated(pair.f, pair.nu, y);
}

}  // namespace arith::pairs
