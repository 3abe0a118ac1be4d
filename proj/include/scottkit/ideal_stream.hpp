#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scottkit/bignat.hpp"
#include "scottkit/finite_poset.hpp"

namespace scottkit {

// One non-trivial ideal, given symbolically: a directed down-set whose
// supremum lies outside the carrier. member_at enumerates the carrier
// (1-based) in the parent poset's canonical element order.
template <class E>
struct IdealDescriptor {
  std::string name;
  E supremum;
  std::function<bool(const E&)> contains;
  std::function<E(const Nat&)> member_at;
};

// Smallest enumerated member of the ideal satisfying pred and above every
// carrier member of anchor. The scan is deliberately bounded: a predicate
// cut out by a genuinely Scott-open set admits a witness at finite depth,
// so exhausting the budget indicts the caller's openness claim rather than
// the machine.
template <class E>
E pick_above(const IdealDescriptor<E>& ideal, const std::vector<E>& anchor,
             const std::function<bool(const E&)>& pred,
             const std::function<bool(const E&, const E&)>& leq,
             std::size_t cap = 4096) {
  for (std::size_t r = 1; r <= cap; ++r) {
    E x = ideal.member_at(Nat(r));
    if (!pred(x)) continue;
    bool bounds = true;
    for (const E& s : anchor)
      if (ideal.contains(s) && !leq(s, x)) {
        bounds = false;
        break;
      }
    if (bounds) return x;
  }
  throw oracle_not_scott_open("pick_above: no witness in ideal \"" + ideal.name +
                              "\" within budget " + std::to_string(cap));
}

// Indexed family of all non-trivial ideals of a poset, declared rather than
// discovered. Indices are 1-based; count is the family size when finite.
template <class E>
struct NonTrivialIdealStream {
  std::function<IdealDescriptor<E>(const Nat&)> at;
  std::optional<Nat> count;
  Nat cursor = 1;

  bool has(const Nat& i) const { return i >= 1 && (!count || i <= *count); }

  IdealDescriptor<E> next() {
    if (!has(cursor)) throw precondition_violation("ideal stream exhausted");
    IdealDescriptor<E> d = at(cursor);
    cursor += 1;
    return d;
  }
};

// Decidable order, a declared stream of every non-trivial ideal, a supremum
// oracle for finite subsets, and a printer: everything the staged product
// construction needs from a factor.
template <class E>
struct EnumerablePoset {
  std::string name;
  OrderOracle<E> order;
  NonTrivialIdealStream<E> ideals;
  std::function<std::optional<E>(const std::vector<E>&)> sup_finite;
  std::function<std::string(const E&)> str;
};

// Every nonempty directed down-set of a finite poset contains its own
// maximum, so the answer is always the empty list; the scan proves it for
// the given poset instead of assuming it.
inline std::vector<DownSet> enumerate_nontrivial_ideals(const FinitePoset& p) {
  for (const ElemSet& d : all_down_sets(p)) {
    if (d.none() || !set_is_directed(p, d)) continue;
    std::optional<std::size_t> top = directed_maximum(p, d);
    if (!top || !d.test(*top))
      throw std::logic_error("finite directed down-set without a maximum");
  }
  return {};
}

// Chain 0 < 1 < 2 < ... with one point on top.
struct OmegaElem {
  std::optional<Nat> v;  // nullopt is the top point
  bool operator==(const OmegaElem&) const = default;
};

inline OmegaElem omega_top() { return OmegaElem{std::nullopt}; }
inline OmegaElem omega_fin(const Nat& n) {
  if (n < 0) throw precondition_violation("omega_fin: negative");
  return OmegaElem{n};
}

inline bool omega_leq(const OmegaElem& x, const OmegaElem& y) {
  if (!y.v) return true;
  if (!x.v) return false;
  return *x.v <= *y.v;
}

inline std::string omega_str(const OmegaElem& x) {
  return x.v ? nat_str(*x.v) : "ω";
}

inline EnumerablePoset<OmegaElem> omega_plus_one() {
  IdealDescriptor<OmegaElem> finite_part{
      "finite-chain",
      omega_top(),
      [](const OmegaElem& x) { return x.v.has_value(); },
      [](const Nat& r) { return OmegaElem{r - 1}; },
  };
  NonTrivialIdealStream<OmegaElem> stream{
      [finite_part](const Nat& i) {
        if (i != 1)
          throw precondition_violation("omega_plus_one: single-ideal stream");
        return finite_part;
      },
      Nat(1),
  };
  auto sup = [](const std::vector<OmegaElem>& xs) -> std::optional<OmegaElem> {
    if (xs.empty()) return std::nullopt;
    OmegaElem best = xs[0];
    for (const OmegaElem& x : xs)
      if (omega_leq(best, x)) best = x;
    return best;
  };
  return EnumerablePoset<OmegaElem>{
      "omega-plus-one",
      OrderOracle<OmegaElem>{"omega-plus-one", omega_leq},
      std::move(stream),
      sup,
      omega_str,
  };
}

}  // namespace scottkit
