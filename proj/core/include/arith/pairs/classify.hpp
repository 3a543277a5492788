#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arith/density/empirical.hpp"
#include "arith/pairs/nu_pair.hpp"

namespace arith::pairs {

/// All n sharing S = {d in supp(f) : d | n} and T = {d in S : nu(n/d) != 0}.
struct SupportClass {
  std::vector<std::uint64_t> divisors;  // S, ascending
  std::vector<std::uint64_t> active;    // T ⊆ S, ascending
  std::vector<density::Checkpoint> counts;

  double density_at(std::size_t checkpoint) const { return counts.at(checkpoint).ratio(); }
  /// "1|2" style renderings of S and T ("" for the empty set).
  std::string divisors_label() const;
  std::string active_label() const;
};

struct ClassDecomposition {
  std::vector<std::uint64_t> ladder;
  std::vector<SupportClass> classes;           // sorted by (S, T)
  std::vector<density::Checkpoint> classified;  // #{n <= x : S(n) nonempty}
};

/// One pass over n <= x (x = last checkpoint, at most N) assigning every n
/// with nonempty S to its (S, T) class. Classes appear as they are met, so
/// their number is bounded by the data rather than 2^|supp f|. Classes with
/// T nonempty contain the candidates for supp(g).
ClassDecomposition classify_support(const NuPair& pair, std::span<const std::uint64_t> checkpoints);

}  // namespace arith::pairs
