#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arith/rational.hpp"

namespace arith::density {

/// One modulus b with its forbidden residues Omega_b ⊆ {0, ..., b-1}.
struct ResidueClassEntry {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> forbidden;
};

/// A family {(b, Omega_b)} describing S = {n : n mod b ∉ Omega_b for all b}.
///
/// tail_constants, when present, holds c_b with S_b(x) <= c_b x for each
/// listed entry (same order). unlisted_tail bounds sum c_b over members of
/// an infinite family that are not listed; its absence means the family is
/// exactly the listed entries.
struct ResidueSieveSpec {
  std::vector<ResidueClassEntry> entries;
  std::optional<std::vector<double>> tail_constants;
  std::optional<double> unlisted_tail;

  /// Throws SpecError for a zero modulus, a residue outside [0, b), or
  /// inconsistent tail declarations.
  void validate() const;
};

struct SieveLimits {
  std::size_t max_entries = 20;             // 2^20 inclusion-exclusion subsets
  std::uint64_t max_modulus = 1'000'000'000;  // cap on lcm of a subset
  std::uint64_t max_residues = 1ULL << 26;  // cap on a materialized residue set
};

/// Exact density of S by inclusion-exclusion over subsets of entries; each
/// intersection S_{b_1} ∩ ... ∩ S_{b_h} is periodic mod lcm(b_i) and its
/// density is (#admissible residues) / lcm. Subsets are walked depth-first
/// so an empty intersection prunes all of its supersets.
Rational sieved_density_exact(const ResidueSieveSpec& spec, const SieveLimits& limits = {});

/// Density of the first `retained` entries plus a bound on what the rest
/// can remove: the true density lies in [density - tail_bound, density].
struct TruncatedDensity {
  Rational density;
  double tail_bound = 0.0;
  std::size_t retained = 0;

  double lower() const { return density.to_double() - tail_bound; }
  double upper() const { return density.to_double(); }
};

TruncatedDensity sieved_density_truncated(const ResidueSieveSpec& spec, std::size_t retained,
                                          const SieveLimits& limits = {});

/// Exact density of M(A) = {a n : a ∈ A, n >= 1} for finite A, by
/// inclusion-exclusion over lcms of subsets of the primitive part of A.
/// Empty A gives 0; 1 ∈ A gives 1.
Rational multiples_density(std::span<const std::uint64_t> set, const SieveLimits& limits = {});

/// The sieve {(a, {0}) : a ∈ A} whose sifted set is the complement of M(A).
ResidueSieveSpec multiples_complement_sieve(std::span<const std::uint64_t> set);

/// Parses one entry "b:r1|r2|..." (also accepts "b,r1|r2").
ResidueClassEntry parse_sieve_entry(std::string_view text);

/// Reads CSV lines "b,omega_list[,c_b]" with omega residues '|'-separated.
/// Lines starting with '#' are comments; "# unlisted_tail=<x>" declares the
/// unlisted tail. Either all or none of the rows must carry c_b.
ResidueSieveSpec read_sieve_csv(std::istream& is);
void write_sieve_csv(std::ostream& os, const ResidueSieveSpec& spec);

}  // namespace arith::density
