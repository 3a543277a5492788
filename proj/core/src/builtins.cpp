#include "arith/builtins.hpp"

#include "arith/errors.hpp"

namespace arith::builtins {

namespace {

Rational prime_power(std::uint64_t p, unsigned k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), k);
  return Rational(out);
}

MultiplicativeSpec make(std::string name, MultiplicativeSpec::Rule rule, UnsupportedPrimeTail tail,
                        Growth growth) {
  return MultiplicativeSpec{std::move(name), std::move(rule), tail, growth};
}

}  // namespace

MultiplicativeSpec mobius() {
  return make("mu", [](std::uint64_t, unsigned k) { return Value(k == 1 ? -1 : 0); },
              UnsupportedPrimeTail::none(), Growth::kBounded);
}

MultiplicativeSpec one() {
  return make("one", [](std::uint64_t, unsigned) { return Value(1); }, UnsupportedPrimeTail::none(),
              Growth::kBounded);
}

MultiplicativeSpec epsilon() {
  return make("epsilon", [](std::uint64_t, unsigned) { return Value(0); },
              UnsupportedPrimeTail::divergent(), Growth::kBounded);
}

MultiplicativeSpec identity() {
  return make("id", [](std::uint64_t p, unsigned k) { return Value(prime_power(p, k)); },
              UnsupportedPrimeTail::none(), Growth::kUnbounded);
}

MultiplicativeSpec reciprocal_identity() {
  return make("recip_id", [](std::uint64_t p, unsigned k) { return Value(prime_power(p, k).reciprocal()); },
              UnsupportedPrimeTail::none(), Growth::kBounded);
}

MultiplicativeSpec liouville() {
  return make("liouville", [](std::uint64_t, unsigned k) { return Value(k % 2 == 1 ? -1 : 1); },
              UnsupportedPrimeTail::none(), Growth::kBounded);
}

MultiplicativeSpec squarefree_indicator() {
  return make("squarefree", [](std::uint64_t, unsigned k) { return Value(k == 1 ? 1 : 0); },
              UnsupportedPrimeTail::none(), Growth::kBounded);
}

MultiplicativeSpec by_name(std::string_view name) {
  if (name == "mu" || name == "mobius") return mobius();
  if (name == "one" || name == "1") return one();
  if (name == "epsilon" || name == "eps") return epsilon();
  if (name == "id") return identity();
  if (name == "recip_id" || name == "reciprocal_id") return reciprocal_identity();
  if (name == "liouville") return liouville();
  if (name == "squarefree") return squarefree_indicator();
  throw SpecError("unknown builtin function '" + std::string(name) + "'");
}

std::vector<std::string> names() {
  return {"mu", "one", "epsilon", "id", "recip_id", "liouville", "squarefree"};
}

}  // namespace arith::builtins
