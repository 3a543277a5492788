#include "arith/arith_func.hpp"

#include <algorithm>
#include <stdexcept>

#include "arith/errors.hpp"

namespace arith {

SupportSet::SupportSet(std::vector<bool> mask, ValueMode mode, std::optional<ZeroTest> threshold)
    : mask_(std::move(mask)), mode_(mode), threshold_(threshold) {
  count_ = static_cast<std::uint64_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::uint64_t SupportSet::count_up_to(std::uint64_t x) const {
  x = std::min<std::uint64_t>(x, mask_.size());
  return static_cast<std::uint64_t>(std::count(mask_.begin(), mask_.begin() + static_cast<std::ptrdiff_t>(x), true));
}

std::vector<std::uint64_t> SupportSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  for (std::uint64_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(i + 1);
  }
  return out;
}

std::optional<std::uint64_t> SupportSet::min() const {
  for (std::uint64_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) return i + 1;
  }
  return std::nullopt;
}

ArithFunc ArithFunc::exact(ExactTable values) {
  if (values.empty()) throw ShapeError("arithmetic function table needs N >= 1");
  ArithFunc f;
  for (const auto& v : values) f.scale_ = std::max(f.scale_, std::abs(v.to_double()));
  f.values_ = std::move(values);
  return f;
}

ArithFunc ArithFunc::floating(FloatTable values, ZeroTest zero_test) {
  if (values.empty()) throw ShapeError("arithmetic function table needs N >= 1");
  ArithFunc f;
  for (const auto& v : values) f.scale_ = std::max(f.scale_, std::abs(v));
  f.values_ = std::move(values);
  f.zero_test_ = zero_test;
  return f;
}

ArithFunc ArithFunc::zero(std::uint64_t limit, ValueMode mode) {
  if (mode == ValueMode::kExact) return exact(ExactTable(limit));
  return floating(FloatTable(limit));
}

std::uint64_t ArithFunc::limit() const noexcept {
  return std::visit([](const auto& v) { return static_cast<std::uint64_t>(v.size()); }, values_);
}

Value ArithFunc::at(std::uint64_t n) const {
  if (n < 1 || n > limit()) {
    throw RangeError("index " + std::to_string(n) + " outside [1, " + std::to_string(limit()) + "]");
  }
  return std::visit([n](const auto& v) { return Value(v[n - 1]); }, values_);
}

bool ArithFunc::is_zero_at(std::uint64_t n) const {
  if (n < 1 || n > limit()) {
    throw RangeError("index " + std::to_string(n) + " outside [1, " + std::to_string(limit()) + "]");
  }
  if (auto e = std::get_if<ExactTable>(&values_)) return (*e)[n - 1].is_zero();
  return zero_test_.is_zero(std::get<FloatTable>(values_)[n - 1], scale_);
}

std::span<const Rational> ArithFunc::exact_values() const {
  if (auto e = std::get_if<ExactTable>(&values_)) return *e;
  throw std::logic_error("exact_values() on a floating table");
}

std::span<const Complex> ArithFunc::floating_values() const {
  if (auto e = std::get_if<FloatTable>(&values_)) return *e;
  throw std::logic_error("floating_values() on an exact table");
}

ArithFunc ArithFunc::with_zero_test(ZeroTest zt) const {
  ArithFunc f = *this;
  f.zero_test_ = zt;
  return f;
}

ArithFunc ArithFunc::to_floating(ZeroTest zt) const {
  if (auto e = std::get_if<ExactTable>(&values_)) {
    FloatTable out;
    out.reserve(e->size());
    for (const auto& r : *e) out.emplace_back(r.to_double(), 0.0);
    return floating(std::move(out), zt);
  }
  return with_zero_test(zt);
}

ArithFunc ArithFunc::truncated(std::uint64_t m) const {
  if (m < 1 || m > limit()) throw RangeError("truncation limit outside [1, N]");
  if (auto e = std::get_if<ExactTable>(&values_)) {
    return exact(ExactTable(e->begin(), e->begin() + static_cast<std::ptrdiff_t>(m)));
  }
  const auto& v = std::get<FloatTable>(values_);
  return floating(FloatTable(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m)), zero_test_);
}

SupportSet ArithFunc::support() const {
  const std::uint64_t n = limit();
  std::vector<bool> mask(n);
  if (auto e = std::get_if<ExactTable>(&values_)) {
    for (std::uint64_t i = 0; i < n; ++i) mask[i] = !(*e)[i].is_zero();
    return SupportSet(std::move(mask), ValueMode::kExact, std::nullopt);
  }
  const auto& v = std::get<FloatTable>(values_);
  for (std::uint64_t i = 0; i < n; ++i) mask[i] = !zero_test_.is_zero(v[i], scale_);
  return SupportSet(std::move(mask), ValueMode::kFloating, zero_test_);
}

}  // namespace arith
