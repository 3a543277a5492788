#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "arith/value.hpp"

namespace arith {

/// The support {n <= N : f(n) != 0} of a table, together with the zero
/// test that decided membership (absent for exact tables).
class SupportSet {
 public:
  SupportSet(std::vector<bool> mask, ValueMode mode, std::optional<ZeroTest> threshold);

  std::uint64_t limit() const noexcept { return mask_.size(); }
  bool contains(std::uint64_t n) const noexcept { return n >= 1 && n <= mask_.size() && mask_[n - 1]; }
  std::uint64_t count() const noexcept { return count_; }
  /// Members not exceeding x.
  std::uint64_t count_up_to(std::uint64_t x) const;
  std::vector<std::uint64_t> members() const;
  std::optional<std::uint64_t> min() const;
  bool empty() const noexcept { return count_ == 0; }

  ValueMode mode() const noexcept { return mode_; }
  const std::optional<ZeroTest>& threshold() const noexcept { return threshold_; }
  const std::vector<bool>& mask() const noexcept { return mask_; }

 private:
  std::vector<bool> mask_;
  std::uint64_t count_ = 0;
  ValueMode mode_;
  std::optional<ZeroTest> threshold_;
};

/// An arithmetic function tabulated on [1, N].
///
/// Values are stored densely with f(n) at offset n - 1; every entry shares
/// one mode. Tables are immutable once built.
class ArithFunc {
 public:
  using ExactTable = std::vector<Rational>;
  using FloatTable = std::vector<Complex>;

  static ArithFunc exact(ExactTable values);
  static ArithFunc floating(FloatTable values, ZeroTest zero_test = {});
  static ArithFunc zero(std::uint64_t limit, ValueMode mode = ValueMode::kExact);

  std::uint64_t limit() const noexcept;
  ValueMode mode() const noexcept {
    return std::holds_alternative<ExactTable>(values_) ? ValueMode::kExact : ValueMode::kFloating;
  }
  bool is_exact() const noexcept { return mode() == ValueMode::kExact; }

  /// f(n) for 1 <= n <= limit(); throws RangeError otherwise.
  Value at(std::uint64_t n) const;
  bool is_zero_at(std::uint64_t n) const;

  /// Direct access to the storage; throws std::logic_error on a mode mismatch.
  std::span<const Rational> exact_values() const;
  std::span<const Complex> floating_values() const;

  const ZeroTest& zero_test() const noexcept { return zero_test_; }
  /// Largest |f(n)|; the reference for relative zero tests.
  double scale() const noexcept { return scale_; }

  ArithFunc with_zero_test(ZeroTest zt) const;
  ArithFunc to_floating(ZeroTest zt = {}) const;
  /// Restriction to [1, m] for m <= limit().
  ArithFunc truncated(std::uint64_t m) const;

  SupportSet support() const;

  friend bool operator==(const ArithFunc& a, const ArithFunc& b) { return a.values_ == b.values_; }

  template <class Visitor>
  decltype(auto) visit(Visitor&& vis) const {
    return std::visit(std::forward<Visitor>(vis), values_);
  }

 private:
  ArithFunc() = default;

  std::variant<ExactTable, FloatTable> values_;
  ZeroTest zero_test_;
  double scale_ = 0.0;
};

/// Shorthand for support(f).
inline SupportSet support(const ArithFunc& f) { return f.support(); }

}  // namespace arith
