#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "arith/arith_func.hpp"
#include "arith/multiplicative.hpp"
#include "arith/pairs/nu_pair.hpp"

namespace arithconv {

/// A function definition loaded from a spec file or a "builtin:<name>"
/// shorthand.
///
///   # comment
///   name = odd_mu
///   kind = multiplicative          (builtin | multiplicative | table)
///   rule = p=2: 0                  first matching rule wins
///   rule = k>=2: 0
///   rule = otherwise: -1
///   unsupported_tail = finite 2    (none | finite P | bounded B | divergent)
///   growth = bounded               (unknown | bounded | unbounded)
///   support_tail = finite          (unknown | finite | bounded T)
///   weighted_tail = finite
///
/// `rules = a: x; b: y` is shorthand for several rule lines. A table spec
/// ends with a line `table:` followed by `n,value` CSV.
struct FunctionSource {
  enum class Kind { kBuiltin, kMultiplicative, kTable };

  std::string name;
  Kind kind = Kind::kBuiltin;
  std::optional<arith::MultiplicativeSpec> spec;  // builtin and multiplicative kinds
  std::string table_text;
  arith::pairs::TailDeclaration support_tail;
  arith::pairs::TailDeclaration weighted_tail;

  bool multiplicative() const { return spec.has_value(); }
  const arith::MultiplicativeSpec& require_spec(std::string_view role) const;
  arith::ArithFunc tabulate(std::uint64_t limit, arith::ValueMode mode, arith::ZeroTest zero_test) const;
};

/// Parses a spec file; errors are SpecError with "<origin>:<line>: " prefixes.
FunctionSource parse_function_source(std::istream& in, const std::string& origin);

/// Reads `builtin:<name>` directly, anything else as a spec file path.
FunctionSource load_function_source(const std::string& ref);

/// Value rule from a pattern/expression list, as used by `rule =` lines.
/// Exposed for tests: "p=2: 0", "k>=2 & p%4=1: 1/p^k", "otherwise: 1".
class RuleSet {
 public:
  void add(std::string_view line);
  bool empty() const;
  arith::Value operator()(std::uint64_t p, unsigned k) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

arith::UnsupportedPrimeTail parse_unsupported_tail(std::string_view text);
arith::Growth parse_growth(std::string_view text);
arith::pairs::TailDeclaration parse_tail_declaration(std::string_view text);
arith::ZeroTest parse_zero_test(std::string_view text);

}  // namespace arithconv
