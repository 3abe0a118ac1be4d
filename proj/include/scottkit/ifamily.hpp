#pragma once

#include <scottkit/bignat.hpp>
#include <scottkit/mono_inj.hpp>
#include <scottkit/pair_code.hpp>
#include <scottkit/sequences.hpp>

#include <optional>

namespace scottkit {

// For each pair 1 <= m < n, a fresh infinite reservoir of naturals:
//   i(m, n) = { 2^a * (2t+1) : t >= 0 } with a = pair_code(m, n) + 1,
//   restricted to values > n.
// Distinct pairs get distinct exponents a, so distinct reservoirs are
// disjoint (members differ in 2-adic valuation), and no member is <= n.
//
// f_{m,n} maps nonempty sequences into i(m, n) along mono_inj, so it is
// injective and sends proper prefix extensions to strictly larger values.

// Number of leading reservoir members discarded by the "> n" restriction.
inline Nat i_set_drop(const Nat& a, const Nat& n) {
  return ((n >> static_cast<unsigned long>(a)) + 1) / 2;
}

// r-th member of i(m, n) in increasing order, 1-based.
inline Nat i_set_element(const Nat& m, const Nat& n, const Nat& r) {
  if (r < 1) throw precondition_violation("i_set_element: ranks start at 1");
  Nat a = pair_code(m, n) + 1;
  return (Nat(2) * (r + i_set_drop(a, n)) - 1) << static_cast<unsigned long>(a);
}

inline bool i_set_contains(const Nat& m, const Nat& n, const Nat& q) {
  if (q <= n) return false;
  Nat a = pair_code(m, n) + 1;
  Nat shifted = q >> static_cast<unsigned long>(a);
  return (shifted << static_cast<unsigned long>(a)) == q && (shifted & 1) == 1;
}

inline Nat f_apply(const Nat& m, const Nat& n, const Seq& s) {
  return i_set_element(m, n, mono_inj(s));
}

struct FImage {
  Nat m, n;  // 1 <= m < n
  Seq s;     // nonempty
};

// Inverse of f: recovers (m, n, s) from q = f_{m,n}(s), or nothing when q is
// in no reservoir. Unambiguous because the reservoirs are disjoint and
// f_{m,n} is injective.
inline std::optional<FImage> f_decode(const Nat& q) {
  if (q <= 0 || (q & 1) == 1) return std::nullopt;
  Nat a = two_adic_valuation(q);
  auto [m, n] = pair_decode(a - 1);
  if (q <= n) return std::nullopt;
  Nat odd = q >> static_cast<unsigned long>(a);
  Nat r = (odd + 1) / 2 - i_set_drop(a, n);
  return FImage{m, n, mono_inj_inverse(r)};
}

}  // namespace scottkit
