#pragma once

#include <scottkit/bignat.hpp>

#include <utility>

namespace scottkit {

// Bijection between {(m, n) : 1 <= m < n} and {0, 1, 2, ...}, ordered
// by n first and then m: (1,2) -> 0, (1,3) -> 1, (2,3) -> 2, (1,4) -> 3, ...
// code(m, n) = T(n-2) + (m-1) with T(j) = j(j+1)/2.
inline Nat pair_code(const Nat& m, const Nat& n) {
  if (!(1 <= m && m < n)) throw precondition_violation("pair_code: need 1 <= m < n");
  Nat j = n - 2;
  return j * (j + 1) / 2 + (m - 1);
}

// Inverse of pair_code.
inline std::pair<Nat, Nat> pair_decode(const Nat& c) {
  if (c < 0) throw precondition_violation("pair_decode: negative code");
  Nat j = (isqrt(8 * c + 1) - 1) / 2;  // largest j with T(j) <= c
  Nat m = c - j * (j + 1) / 2 + 1;
  return {m, j + 2};
}

}  // namespace scottkit
