#include "arith/value.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace arith {

std::string to_string(ValueMode mode) { return mode == ValueMode::kExact ? "exact" : "floating"; }

std::string ZeroTest::to_string() const {
  return (rule == Rule::kAbsolute ? "abs:" : "rel:") + format_double(tau);
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, end);
}

const Rational& Value::rational() const {
  if (auto r = std::get_if<Rational>(&v_)) return *r;
  throw std::logic_error("Value::rational on a floating value");
}

Complex Value::to_complex() const {
  if (auto r = std::get_if<Rational>(&v_)) return {r->to_double(), 0.0};
  return std::get<Complex>(v_);
}

double Value::magnitude() const {
  if (auto r = std::get_if<Rational>(&v_)) return std::abs(r->to_double());
  return std::abs(std::get<Complex>(v_));
}

bool Value::is_zero(const ZeroTest& test, double scale) const {
  if (auto r = std::get_if<Rational>(&v_)) return r->is_zero();
  return test.is_zero(std::get<Complex>(v_), scale);
}

std::string Value::to_string() const {
  if (auto r = std::get_if<Rational>(&v_)) return r->to_string();
  const Complex& c = std::get<Complex>(v_);
  std::string out = format_double(c.real());
  if (c.imag() != 0.0) {
    out += c.imag() < 0 ? "-" : "+";
    out += format_double(std::abs(c.imag()));
    out += "i";
  }
  return out;
}

namespace {

double parse_real(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a real number: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Value Value::parse(std::string_view text, ValueMode mode) {
  if (mode == ValueMode::kExact) return Value(Rational::parse(text));
  if (!text.empty() && text.back() == 'i') {
    // a+bi / a-bi: split at the last sign that is not an exponent sign
    std::string_view body = text.substr(0, text.size() - 1);
    for (std::size_t i = body.size(); i-- > 1;) {
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        double re = parse_real(body.substr(0, i));
        double im = parse_real(body.substr(i + 1));
        return Value(Complex(re, body[i] == '-' ? -im : im));
      }
    }
    return Value(Complex(0.0, parse_real(body)));
  }
  // exact syntax is accepted in floating tables too ("1/3")
  if (text.find('/') != std::string_view::npos) {
    return Value(Complex(Rational::parse(text).to_double(), 0.0));
  }
  return Value(Complex(parse_real(text), 0.0));
}

}  // namespace arith
