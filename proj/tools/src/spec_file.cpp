#include "spec_file.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include "arith/builtins.hpp"
#include "arith/errors.hpp"
#include "arith/table_csv.hpp"

namespace arithconv {

using arith::Rational;
using arith::SpecError;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

double parse_bound(std::string_view text, std::string_view what) {
  const std::string t(trim(text));
  double v = 0.0;
  try {
    if (t.find('/') != std::string::npos) {
      v = Rational::parse(t).to_double();
    } else {
      std::size_t used = 0;
      v = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
    }
  } catch (const std::exception&) {
    throw SpecError("bad " + std::string(what) + " '" + t + "'");
  }
  if (!(v >= 0.0) || !std::isfinite(v)) throw SpecError(std::string(what) + " must be finite and >= 0");
  return v;
}

// ---- value expressions over p and k ----

struct Node {
  enum class Op { kConst, kP, kK, kNeg, kAdd, kSub, kMul, kDiv, kPow };
  Op op;
  Rational value;
  int lhs = -1;
  int rhs = -1;
};

class Expression {
 public:
  explicit Expression(std::string_view text) : text_(text) {
    root_ = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  Rational eval(std::uint64_t p, unsigned k) const { return eval(root_, p, k); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Node> nodes_;
  int root_ = -1;

  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError("expression '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int add(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  int parse_sum() {
    int lhs = parse_product();
    for (;;) {
      if (eat('+')) {
        lhs = add({Node::Op::kAdd, {}, lhs, parse_product()});
      } else if (eat('-')) {
        lhs = add({Node::Op::kSub, {}, lhs, parse_product()});
      } else {
        return lhs;
      }
    }
  }

  int parse_product() {
    int lhs = parse_unary();
    for (;;) {
      if (eat('*')) {
        lhs = add({Node::Op::kMul, {}, lhs, parse_unary()});
      } else if (eat('/')) {
        lhs = add({Node::Op::kDiv, {}, lhs, parse_unary()});
      } else {
        return lhs;
      }
    }
  }

  int parse_unary() {
    if (eat('-')) return add({Node::Op::kNeg, {}, parse_unary(), -1});
    if (eat('+')) return parse_unary();
    return parse_power();
  }

  int parse_power() {
    int base = parse_primary();
    if (eat('^')) return add({Node::Op::kPow, {}, base, parse_unary()});
    return base;
  }

  int parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      int inner = parse_sum();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (c == 'p' || c == 'k') {
      ++pos_;
      return add({c == 'p' ? Node::Op::kP : Node::Op::kK, {}, -1, -1});
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.')) ++end;
      Rational v;
      try {
        v = Rational::parse(text_.substr(pos_, end - pos_));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      pos_ = end;
      return add({Node::Op::kConst, std::move(v), -1, -1});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static Rational power(Rational base, const Rational& exponent) {
    if (!exponent.is_integer()) throw SpecError("non-integer exponent " + exponent.to_string());
    const mpz_class e = exponent.numerator();
    if (abs(e) > 4096) throw SpecError("exponent " + exponent.to_string() + " too large");
    long n = e.get_si();
    if (n < 0) {
      if (base.is_zero()) throw SpecError("zero raised to a negative power");
      base = base.reciprocal();
      n = -n;
    }
    Rational out(1);
    while (n > 0) {
      if (n & 1) out *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return out;
  }

  Rational eval(int i, std::uint64_t p, unsigned k) const {
    const Node& n = nodes_[i];
    switch (n.op) {
      case Node::Op::kConst: return n.value;
      case Node::Op::kP: return Rational(p);
      case Node::Op::kK: return Rational(k);
      case Node::Op::kNeg: return -eval(n.lhs, p, k);
      case Node::Op::kAdd: return eval(n.lhs, p, k) + eval(n.rhs, p, k);
      case Node::Op::kSub: return eval(n.lhs, p, k) - eval(n.rhs, p, k);
      case Node::Op::kMul: return eval(n.lhs, p, k) * eval(n.rhs, p, k);
      case Node::Op::kDiv: {
        Rational d = eval(n.rhs, p, k);
        if (d.is_zero()) throw SpecError("division by zero");
        return eval(n.lhs, p, k) / d;
      }
      case Node::Op::kPow: return power(eval(n.lhs, p, k), eval(n.rhs, p, k));
    }
    return {};
  }
};

// ---- patterns: conjunctions of comparisons on p, k, or p % m ----

struct Condition {
  enum class Cmp { kEq, kNe, kLt, kLe, kGt, kGe };
  bool on_p = true;
  std::uint64_t modulus = 0;  // nonzero: compare p % modulus (or k % modulus)
  Cmp cmp = Cmp::kEq;
  std::uint64_t rhs = 0;

  bool holds(std::uint64_t p, unsigned k) const {
    std::uint64_t lhs = on_p ? p : k;
    if (modulus) lhs %= modulus;
    switch (cmp) {
      case Cmp::kEq: return lhs == rhs;
      case Cmp::kNe: return lhs != rhs;
      case Cmp::kLt: return lhs < rhs;
      case Cmp::kLe: return lhs <= rhs;
      case Cmp::kGt: return lhs > rhs;
      case Cmp::kGe: return lhs >= rhs;
    }
    return false;
  }
};

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw SpecError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

Condition parse_condition(std::string_view text) {
  Condition c;
  std::string_view t = trim(text);
  if (t.empty() || (t[0] != 'p' && t[0] != 'k')) throw SpecError("pattern '" + std::string(text) + "' must start with p or k");
  c.on_p = t[0] == 'p';
  t = trim(t.substr(1));
  if (!t.empty() && t[0] == '%') {
    std::size_t i = 1;
    while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == ' ')) ++i;
    c.modulus = parse_uint(t.substr(1, i - 1), "modulus");
    if (c.modulus == 0) throw SpecError("pattern modulus must be >= 1");
    t = trim(t.substr(i));
  }
  static constexpr std::pair<std::string_view, Condition::Cmp> ops[] = {
      {"==", Condition::Cmp::kEq}, {"!=", Condition::Cmp::kNe}, {"<=", Condition::Cmp::kLe},
      {">=", Condition::Cmp::kGe}, {"=", Condition::Cmp::kEq},  {"<", Condition::Cmp::kLt},
      {">", Condition::Cmp::kGt}};
  for (const auto& [tok, cmp] : ops) {
    if (t.substr(0, tok.size()) == tok) {
      c.cmp = cmp;
      c.rhs = parse_uint(t.substr(tok.size()), "pattern value");
      return c;
    }
  }
  throw SpecError("pattern '" + std::string(text) + "' has no comparison");
}

struct Rule {
  std::vector<Condition> conditions;  // empty: catch-all
  Expression value;
};

}  // namespace

struct RuleSet::Impl {
  std::vector<Rule> rules;
};

void RuleSet::add(std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) throw SpecError("rule '" + std::string(line) + "' needs '<pattern>: <value>'");
  const std::string_view pattern = trim(line.substr(0, colon));
  std::vector<Condition> conditions;
  if (pattern != "otherwise" && pattern != "*") {
    std::string normalized(pattern);
    for (auto& ch : normalized) {
      if (ch == '&') ch = ',';
    }
    for (auto part : split(normalized, ',')) {
      if (part.empty()) throw SpecError("empty condition in pattern '" + std::string(pattern) + "'");
      conditions.push_back(parse_condition(part));
    }
  }
  auto next = std::make_shared<Impl>(impl_ ? *impl_ : Impl{});
  next->rules.push_back(Rule{std::move(conditions), Expression(trim(line.substr(colon + 1)))});
  impl_ = std::move(next);
}

bool RuleSet::empty() const { return !impl_ || impl_->rules.empty(); }

arith::Value RuleSet::operator()(std::uint64_t p, unsigned k) const {
  if (impl_) {
    for (const auto& r : impl_->rules) {
      bool match = true;
      for (const auto& c : r.conditions) {
        if (!c.holds(p, k)) {
          match = false;
          break;
        }
      }
      if (match) return r.value.eval(p, k);
    }
  }
  throw SpecError("no rule covers p=" + std::to_string(p) + ", k=" + std::to_string(k));
}

arith::UnsupportedPrimeTail parse_unsupported_tail(std::string_view text) {
  std::string norm(trim(text));
  for (auto& ch : norm) {
    if (ch == ':') ch = ' ';
  }
  std::istringstream is(norm);
  std::string kind;
  is >> kind;
  if (kind == "none") return arith::UnsupportedPrimeTail::none();
  if (kind == "divergent") return arith::UnsupportedPrimeTail::divergent();
  std::string arg;
  is >> arg;
  if (kind == "finite") return arith::UnsupportedPrimeTail::finite(parse_uint(arg, "last unsupported prime"));
  if (kind == "bounded" || kind == "sum") {
    return arith::UnsupportedPrimeTail::bounded(parse_bound(arg, "unsupported tail bound"));
  }
  throw SpecError("unsupported_tail must be none, finite <P>, bounded <B> or divergent; got '" + std::string(text) + "'");
}

arith::Growth parse_growth(std::string_view text) {
  text = trim(text);
  if (text == "unknown") return arith::Growth::kUnknown;
  if (text == "bounded") return arith::Growth::kBounded;
  if (text == "unbounded") return arith::Growth::kUnbounded;
  throw SpecError("growth must be unknown, bounded or unbounded; got '" + std::string(text) + "'");
}

arith::pairs::TailDeclaration parse_tail_declaration(std::string_view text) {
  std::string norm(trim(text));
  for (auto& ch : norm) {
    if (ch == ':') ch = ' ';
  }
  std::istringstream is(norm);
  std::string kind, arg;
  is >> kind >> arg;
  if (kind == "unknown") return arith::pairs::TailDeclaration::unknown();
  if (kind == "finite") return arith::pairs::TailDeclaration::finite();
  if (kind == "bounded") return arith::pairs::TailDeclaration::bounded(parse_bound(arg, "tail bound"));
  throw SpecError("tail declaration must be unknown, finite or bounded <T>; got '" + std::string(text) + "'");
}

arith::ZeroTest parse_zero_test(std::string_view text) {
  text = trim(text);
  arith::ZeroTest zt;
  const auto colon = text.find(':');
  std::string_view tau = text;
  if (colon != std::string_view::npos) {
    const auto rule = text.substr(0, colon);
    if (rule == "abs") {
      zt.rule = arith::ZeroTest::Rule::kAbsolute;
    } else if (rule == "rel") {
      zt.rule = arith::ZeroTest::Rule::kRelative;
    } else {
      throw SpecError("zero test rule must be abs or rel");
    }
    tau = text.substr(colon + 1);
  }
  try {
    zt.tau = std::stod(std::string(tau));
  } catch (const std::exception&) {
    throw SpecError("bad zero test threshold '" + std::string(tau) + "'");
  }
  if (!(zt.tau >= 0.0)) throw SpecError("zero test threshold must be >= 0");
  return zt;
}

const arith::MultiplicativeSpec& FunctionSource::require_spec(std::string_view role) const {
  if (!spec) {
    throw arith::NotMultiplicative(std::string(role) + " '" + name + "' is a table, not a multiplicative spec");
  }
  return *spec;
}

arith::ArithFunc FunctionSource::tabulate(std::uint64_t limit, arith::ValueMode mode, arith::ZeroTest zero_test) const {
  if (spec) return arith::tabulate(*spec, limit, mode, zero_test);
  std::istringstream in(table_text);
  auto f = arith::read_table_csv(in, mode, limit, zero_test);
  return f;
}

FunctionSource parse_function_source(std::istream& in, const std::string& origin) {
  FunctionSource src;
  std::optional<std::string> kind, builtin;
  std::optional<arith::UnsupportedPrimeTail> tail;
  std::optional<arith::Growth> growth;
  RuleSet rules;
  bool in_table = false;
  std::string line;
  std::size_t line_no = 0;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (in_table) {
        src.table_text += line;
        src.table_text += '\n';
        continue;
      }
      const std::string_view t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      if (t == "table:") {
        in_table = true;
        continue;
      }
      const auto eq = t.find('=');
      if (eq == std::string_view::npos) throw SpecError("expected 'key = value'");
      const std::string key(trim(t.substr(0, eq)));
      const std::string_view value = trim(t.substr(eq + 1));
      if (key == "name") {
        src.name = value;
      } else if (key == "kind") {
        kind = value;
      } else if (key == "builtin") {
        builtin = value;
      } else if (key == "rule") {
        rules.add(value);
      } else if (key == "rules") {
        for (auto r : split(value, ';')) {
          if (!r.empty()) rules.add(r);
        }
      } else if (key == "unsupported_tail") {
        tail = parse_unsupported_tail(value);
      } else if (key == "growth") {
        growth = parse_growth(value);
      } else if (key == "support_tail") {
        src.support_tail = parse_tail_declaration(value);
      } else if (key == "weighted_tail") {
        src.weighted_tail = parse_tail_declaration(value);
      } else {
        throw SpecError("unknown key '" + key + "'");
      }
    }
  } catch (const SpecError& e) {
    throw SpecError(origin + ":" + std::to_string(line_no) + ": " + e.what());
  }

  const std::string where = origin + ": ";
  if (!kind) kind = builtin ? "builtin" : in_table ? "table" : "multiplicative";
  if (*kind == "builtin") {
    if (!builtin) throw SpecError(where + "kind = builtin needs 'builtin = <name>'");
    src.kind = FunctionSource::Kind::kBuiltin;
    src.spec = arith::builtins::by_name(*builtin);
  } else if (*kind == "multiplicative") {
    if (rules.empty()) throw SpecError(where + "multiplicative spec has no rules");
    src.kind = FunctionSource::Kind::kMultiplicative;
    src.spec = arith::MultiplicativeSpec{src.name.empty() ? origin : src.name,
                                         [rules](std::uint64_t p, unsigned k) { return rules(p, k); },
                                         std::nullopt, arith::Growth::kUnknown};
  } else if (*kind == "table") {
    if (!in_table) throw SpecError(where + "kind = table needs a 'table:' section");
    src.kind = FunctionSource::Kind::kTable;
  } else {
    throw SpecError(where + "kind must be builtin, multiplicative or table");
  }
  if (src.kind != FunctionSource::Kind::kTable && in_table) throw SpecError(where + "table section in a non-table spec");
  if (src.kind == FunctionSource::Kind::kTable && (tail || growth)) {
    throw SpecError(where + "unsupported_tail and growth apply to multiplicative specs only");
  }
  if (src.spec) {
    if (tail) src.spec->unsupported_tail = tail;
    if (growth) src.spec->growth = *growth;
    if (src.name.empty()) src.name = src.spec->name;
    src.spec->name = src.name;
  }
  if (src.name.empty()) src.name = origin;
  return src;
}

FunctionSource load_function_source(const std::string& ref) {
  constexpr std::string_view prefix = "builtin:";
  if (ref.rfind(prefix, 0) == 0) {
    std::istringstream in("builtin = " + ref.substr(prefix.size()) + "\n");
    return parse_function_source(in, ref);
  }
  std::ifstream in(ref);
  if (!in) throw SpecError("cannot open spec file '" + ref + "'");
  return parse_function_source(in, ref);
}

}  // namespace arithconv
