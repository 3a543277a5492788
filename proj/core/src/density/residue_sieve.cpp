#include "arith/density/residue_sieve.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "arith/errors.hpp"
#include "arith/value.hpp"

namespace arith::density {

void ResidueSieveSpec::validate() const {
  for (const auto& e : entries) {
    if (e.modulus == 0) throw SpecError("sieve modulus must be >= 1");
    for (auto r : e.forbidden) {
      if (r >= e.modulus) {
        throw SpecError("residue " + std::to_string(r) + " outside [0, " + std::to_string(e.modulus) + ")");
      }
    }
  }
  if (tail_constants) {
    if (tail_constants->size() != entries.size()) {
      throw SpecError("tail constants must match the number of entries");
    }
    for (double c : *tail_constants) {
      if (!(c > 0.0)) throw SpecError("tail constants c_b must be positive");
    }
  }
  if (unlisted_tail && !(*unlisted_tail >= 0.0)) throw SpecError("unlisted tail must be >= 0");
}

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = b / g;
  if (a > cap / q) {
    throw ComplexityError("subset modulus lcm exceeds cap " + std::to_string(cap));
  }
  return a * q;
}

struct SieveWalker {
  const std::vector<ResidueClassEntry>& entries;
  std::vector<std::vector<char>> forbidden_mask;  // per entry, size b
  const SieveLimits& limits;
  Rational total;

  // theta: admissible residues mod ell of the current intersection (|U| = depth)
  void descend(std::size_t next, std::uint64_t ell, const std::vector<std::uint64_t>& theta, std::size_t depth) {
    for (std::size_t i = next; i < entries.size(); ++i) {
      const std::uint64_t b = entries[i].modulus;
      const std::uint64_t lifted = checked_lcm(ell, b, limits.max_modulus);
      const std::uint64_t copies = lifted / ell;
      std::vector<std::uint64_t> out;
      const auto& mask = forbidden_mask[i];
      for (std::uint64_t t = 0; t < copies; ++t) {
        for (std::uint64_t th : theta) {
          const std::uint64_t r = th + t * ell;
          if (mask[r % b]) {
            out.push_back(r);
            if (out.size() > limits.max_residues) {
              throw ComplexityError("intersection residue set exceeds cap " + std::to_string(limits.max_residues));
            }
          }
        }
      }
      if (out.empty()) continue;  // every superset is empty too
      Rational term(static_cast<long long>(out.size()), static_cast<long long>(lifted));
      if ((depth + 1) % 2 == 1) {
        total -= term;
      } else {
        total += term;
      }
      descend(i + 1, lifted, out, depth + 1);
    }
  }
};

Rational exact_density(const std::vector<ResidueClassEntry>& entries, const SieveLimits& limits) {
  if (entries.size() > limits.max_entries) {
    throw ComplexityError("sieve has " + std::to_string(entries.size()) + " entries; cap is " +
                          std::to_string(limits.max_entries));
  }
  SieveWalker walker{entries, {}, limits, Rational(1)};
  for (const auto& e : entries) {
    if (e.modulus > limits.max_modulus) throw ComplexityError("modulus exceeds cap");
    std::vector<char> mask(e.modulus, 0);
    for (auto r : e.forbidden) mask[r] = 1;
    walker.forbidden_mask.push_back(std::move(mask));
  }
  walker.descend(0, 1, std::vector<std::uint64_t>{0}, 0);
  return walker.total;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw SpecError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_residues(std::string_view s) {
  std::vector<std::uint64_t> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto bar = s.find('|', start);
    out.push_back(parse_u64(s.substr(start, bar - start), "residue"));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

}  // namespace

Rational sieved_density_exact(const ResidueSieveSpec& spec, const SieveLimits& limits) {
  spec.validate();
  return exact_density(spec.entries, limits);
}

TruncatedDensity sieved_density_truncated(const ResidueSieveSpec& spec, std::size_t retained,
                                          const SieveLimits& limits) {
  spec.validate();
  if (retained > spec.entries.size()) {
    throw SpecError("cannot retain " + std::to_string(retained) + " of " + std::to_string(spec.entries.size()) +
                    " entries");
  }
  TruncatedDensity out;
  out.retained = retained;
  const bool omits_listed = retained < spec.entries.size();
  if (omits_listed && !spec.tail_constants) {
    throw SpecError("truncation omits entries but no tail constants c_b were declared");
  }
  if (omits_listed) {
    for (std::size_t i = retained; i < spec.entries.size(); ++i) out.tail_bound += (*spec.tail_constants)[i];
  }
  if (spec.unlisted_tail) out.tail_bound += *spec.unlisted_tail;
  std::vector<ResidueClassEntry> kept(spec.entries.begin(), spec.entries.begin() + static_cast<std::ptrdiff_t>(retained));
  out.density = exact_density(kept, limits);
  return out;
}

Rational multiples_density(std::span<const std::uint64_t> set, const SieveLimits& limits) {
  std::vector<std::uint64_t> a(set.begin(), set.end());
  if (std::find(a.begin(), a.end(), 0) != a.end()) throw SpecError("set of multiples cannot contain 0");
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty()) return Rational(0);
  if (a.front() == 1) return Rational(1);

  // primitive part: drop elements that are multiples of smaller ones
  std::vector<std::uint64_t> primitive;
  for (auto v : a) {
    bool covered = false;
    for (auto p : primitive) {
      if (v % p == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) primitive.push_back(v);
  }
  if (primitive.size() > limits.max_entries) {
    throw ComplexityError("set of multiples has " + std::to_string(primitive.size()) +
                          " primitive elements; cap is " + std::to_string(limits.max_entries));
  }

  Rational total;
  constexpr std::uint64_t kNoCap = ~std::uint64_t{0};
  auto walk = [&](auto&& self, std::size_t next, std::uint64_t ell, std::size_t depth) -> void {
    for (std::size_t i = next; i < primitive.size(); ++i) {
      const std::uint64_t lifted = checked_lcm(ell, primitive[i], kNoCap);
      const Rational term = Rational(1) / Rational(lifted);
      if ((depth + 1) % 2 == 1) {
        total += term;
      } else {
        total -= term;
      }
      self(self, i + 1, lifted, depth + 1);
    }
  };
  walk(walk, 0, 1, 0);
  return total;
}

ResidueSieveSpec multiples_complement_sieve(std::span<const std::uint64_t> set) {
  ResidueSieveSpec spec;
  for (auto a : set) spec.entries.push_back({a, {0}});
  return spec;
}

ResidueClassEntry parse_sieve_entry(std::string_view text) {
  auto sep = text.find(':');
  if (sep == std::string_view::npos) sep = text.find(',');
  if (sep == std::string_view::npos) throw SpecError("sieve entry '" + std::string(text) + "' needs b:residues");
  ResidueClassEntry e;
  e.modulus = parse_u64(text.substr(0, sep), "modulus");
  e.forbidden = parse_residues(text.substr(sep + 1));
  if (e.modulus == 0) throw SpecError("sieve modulus must be >= 1");
  for (auto r : e.forbidden) {
    if (r >= e.modulus) {
      throw SpecError("residue " + std::to_string(r) + " outside [0, " + std::to_string(e.modulus) + ")");
    }
  }
  return e;
}

ResidueSieveSpec read_sieve_csv(std::istream& is) {
  ResidueSieveSpec spec;
  std::vector<double> tails;
  std::size_t with_tail = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view key = "# unlisted_tail=";
      if (line.rfind(key, 0) == 0) spec.unlisted_tail = std::stod(line.substr(key.size()));
      continue;
    }
    if (line.rfind("b,", 0) == 0) continue;  // header
    try {
      const auto c1 = line.find(',');
      if (c1 == std::string::npos) throw SpecError("expected b,omega_list");
      const auto c2 = line.find(',', c1 + 1);
      ResidueClassEntry e;
      e.modulus = parse_u64(std::string_view(line).substr(0, c1), "modulus");
      e.forbidden = parse_residues(std::string_view(line).substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1));
      if (c2 != std::string::npos) {
        tails.push_back(Rational::parse(std::string_view(line).substr(c2 + 1)).to_double());
        ++with_tail;
      }
      spec.entries.push_back(std::move(e));
    } catch (const std::invalid_argument& err) {
      throw SpecError("sieve line " + std::to_string(line_no) + ": " + err.what());
    } catch (const SpecError& err) {
      throw SpecError("sieve line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  if (with_tail != 0 && with_tail != spec.entries.size()) {
    throw SpecError("either every sieve row or none must carry a tail constant");
  }
  if (with_tail != 0) spec.tail_constants = std::move(tails);
  spec.validate();
  return spec;
}

void write_sieve_csv(std::ostream& os, const ResidueSieveSpec& spec) {
  if (spec.unlisted_tail) os << "# unlisted_tail=" << format_double(*spec.unlisted_tail) << '\n';
  for (std::size_t i = 0; i < spec.entries.size(); ++i) {
    const auto& e = spec.entries[i];
    os << e.modulus << ',';
    for (std::size_t j = 0; j < e.forbidden.size(); ++j) os << (j ? "|" : "") << e.forbidden[j];
    if (spec.tail_constants) os << ',' << format_double((*spec.tail_constants)[i]);
    os << '\n';
  }
}

}  // namespace arith::density
