#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "scottkit/bignat.hpp"

namespace scottkit {

// Deterministic randomness for the verification scenarios. Draws come from
// the fully specified mt19937_64 stream, and ranges are reduced by modulus
// rather than a distribution, so byte-identical reruns hold across
// standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // uniform over 0..n-1 (the modulus skew is irrelevant for sampling checks)
  std::size_t below(std::size_t n) {
    if (n == 0) throw precondition_violation("Rng::below: empty range");
    return static_cast<std::size_t>(eng_() % n);
  }

  // uniform over lo..hi inclusive
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw precondition_violation("Rng::between: empty range");
    return lo + eng_() % (hi - lo + 1);
  }

  bool coin() { return (eng_() & 1) != 0; }

  template <class T>
  const T& pick(const std::vector<T>& pool) {
    if (pool.empty()) throw precondition_violation("Rng::pick: empty pool");
    return pool[below(pool.size())];
  }

 private:
  std::mt19937_64 eng_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5c077;

}  // namespace scottkit
