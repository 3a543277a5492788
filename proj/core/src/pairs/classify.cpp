#include "arith/pairs/classify.hpp"

#include <algorithm>
#include <unordered_map>

#include "arith/errors.hpp"

namespace arith::pairs {

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(v[i]);
  }
  return out;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto v : key) {
      h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::string SupportClass::divisors_label() const { return join(divisors); }
std::string SupportClass::active_label() const { return join(active); }

ClassDecomposition classify_support(const NuPair& pair, std::span<const std::uint64_t> checkpoints) {
  const std::uint64_t x = checkpoints.empty() ? pair.limit()
                                              : *std::max_element(checkpoints.begin(), checkpoints.end());
  if (x > pair.limit()) throw RangeError("classification limit exceeds N");
  ClassDecomposition out;
  out.ladder = density::normalize_checkpoints(checkpoints, x);

  const auto f_support = pair.f.truncated(x).support().members();
  const auto nu_support = pair.nu.support();

  // divisor lists from supp(f), CSR layout; filling d ascending keeps each list sorted
  std::vector<std::uint32_t> offsets(x + 2, 0);
  for (auto d : f_support) {
    for (std::uint64_t n = d; n <= x; n += d) ++offsets[n + 1];
  }
  for (std::uint64_t n = 1; n <= x + 1; ++n) offsets[n] += offsets[n - 1];
  std::vector<std::uint64_t> entries(offsets[x + 1]);
  {
    std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
    for (auto d : f_support) {
      for (std::uint64_t n = d; n <= x; n += d) {
        const bool active = nu_support.contains(n / d);
        entries[fill[n]++] = (d << 1) | (active ? 1 : 0);
      }
    }
  }

  struct Running {
    std::vector<std::uint64_t> key;
    std::uint64_t count = 0;
    std::vector<density::Checkpoint> counts;
  };
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, KeyHash> index;
  std::vector<Running> running;
  std::uint64_t classified = 0;
  std::size_t next_cp = 0;
  std::vector<std::uint64_t> key;

  auto pad = [&](Running& r, std::size_t upto) {
    while (r.counts.size() < upto) r.counts.push_back({out.ladder[r.counts.size()], r.count});
  };

  for (std::uint64_t n = 1; n <= x; ++n) {
    const auto begin = offsets[n];
    const auto end = offsets[n + 1];
    if (begin != end) {
      key.assign(entries.begin() + begin, entries.begin() + end);
      auto [it, inserted] = index.try_emplace(key, running.size());
      if (inserted) running.push_back({key, 0, {}});
      Running& r = running[it->second];
      pad(r, next_cp);
      ++r.count;
      ++classified;
    }
    if (n == out.ladder[next_cp]) {
      out.classified.push_back({n, classified});
      ++next_cp;
    }
  }

  for (auto& r : running) {
    pad(r, out.ladder.size());
    SupportClass c;
    for (auto e : r.key) {
      c.divisors.push_back(e >> 1);
      if (e & 1) c.active.push_back(e >> 1);
    }
    c.counts = std::move(r.counts);
    out.classes.push_back(std::move(c));
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const SupportClass& a, const SupportClass& b) {
    return std::tie(a.divisors, a.active) < std::tie(b.divisors, b.active);
  });
  return out;
}

}  // namespace arith::pairs
