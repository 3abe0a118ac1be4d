#pragma once

#include <scottkit/bignat.hpp>
#include <scottkit/sequences.hpp>

#include <vector>

namespace scottkit {

// Rank/unrank of nonempty sequences of naturals >= 1, ordered by weight and
// then lexicographically within a weight class. Ranks start at 1:
//   [1] -> 1, [2] -> 2, [1,1] -> 3, [3] -> 4, [1,2] -> 5, [2,1] -> 6, ...
// The map is injective and monotone for the prefix order: a proper extension
// has strictly larger weight, hence a strictly larger rank.
//
// Counting facts used throughout (F = fib):
//   #{s : weight(s) = w}  = F(w-1)        for w >= 2
//   #{s : weight(s) <= W} = F(W+1) - 1

// Number of (possibly empty) sequences of weight exactly r.
// Empty has weight 0; no sequence has weight 1; otherwise F(r-1).
inline Nat completions(const Nat& r) {
  if (r < 0 || r == 1) return 0;
  if (r == 0) return 1;
  return fib(r - 1);
}

// Sum of completions(r) for r in [a, b].
inline Nat completions_range_sum(const Nat& a, const Nat& b) {
  if (b < a) return 0;
  Nat total = (a <= 0 && 0 <= b) ? 1 : 0;
  Nat c = a < 2 ? Nat(2) : a;
  if (b >= c) total += fib(b + 1) - fib(c);  // sum of F(r-1), r in [c, b]
  return total;
}

inline Nat seq_count_weight_at_most(const Nat& w) {
  if (w < 2) return 0;
  return fib(w + 1) - 1;
}

inline Nat mono_inj(const Seq& s) {
  if (s.empty() || !seq_entries_valid(s))
    throw precondition_violation("mono_inj: need a nonempty sequence of naturals >= 1");
  Nat w = seq_weight(s);
  // Ranks below this weight class.
  Nat rank = fib(w) - 1;
  // Lexicographic rank within the class: count sequences of the same weight
  // that first differ from s at position i with a smaller entry.
  Nat prefix_weight = 0;
  for (const Nat& si : s) {
    Nat budget = w - prefix_weight - 1;  // weight left after spending one slot
    rank += completions_range_sum(budget - si + 1, budget - 1);
    prefix_weight += si + 1;
  }
  return rank + 1;
}

inline Seq mono_inj_inverse(const Nat& idx) {
  if (idx < 1) throw precondition_violation("mono_inj_inverse: ranks start at 1");
  // Smallest w with F(w+1) - 1 >= idx.
  Nat w = 2;
  while (seq_count_weight_at_most(w) < idx) ++w;
  Nat q = idx - (fib(w) - 1);  // 1-based rank within the weight class
  Seq out;
  Nat r = w;  // remaining weight budget
  while (r > 0) {
    for (Nat v = 1; v <= r - 1; ++v) {
      Nat fits = completions(r - 1 - v);
      if (q > fits) {
        q -= fits;
        continue;
      }
      out.push_back(v);
      r = r - 1 - v;
      break;
    }
  }
  return out;
}

// All sequences of weight <= w_max in rank order.
inline std::vector<Seq> sequences_up_to_weight(const Nat& w_max) {
  std::vector<Seq> out;
  Nat total = seq_count_weight_at_most(w_max);
  for (Nat i = 1; i <= total; ++i) out.push_back(mono_inj_inverse(i));
  return out;
}

}  // namespace scottkit
