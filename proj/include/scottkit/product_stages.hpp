#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "scottkit/bignat.hpp"
#include "scottkit/finite_poset.hpp"
#include "scottkit/ideal_stream.hpp"

namespace scottkit {

// Membership oracle for a would-be Scott-open subset of a product poset.
template <class A, class B>
struct ProductOpenOracle {
  std::string name;
  std::function<bool(const A&, const B&)> contains;
};

// The finite stages of the boxing construction. A_stages[k-1] holds stage
// k's picks on the left factor (stage 1 is the start point), B_stages the
// right factor. E and F are the index sets computed at the final stage;
// the histories keep one entry per stage from stage 2 on. Immutable once
// returned.
template <class A, class B>
struct StageState {
  std::vector<std::vector<A>> A_stages;
  std::vector<std::vector<B>> B_stages;
  std::size_t n = 0;
  std::vector<Nat> E, F;
  std::vector<std::vector<Nat>> E_history, F_history;

  bool operator==(const StageState&) const = default;
};

namespace detail {

// x lands in the up-closure of some stage set with 1-based index in [lo, hi].
template <class E>
bool in_up_union(const OrderOracle<E>& ord,
                 const std::vector<std::vector<E>>& stages, std::size_t lo,
                 std::size_t hi, const E& x) {
  for (std::size_t k = lo; k <= hi && k <= stages.size(); ++k)
    for (const E& a : stages[k - 1])
      if (ord.leq(a, x)) return true;
  return false;
}

template <class E>
std::vector<E> union_of(const std::vector<std::vector<E>>& stages) {
  std::vector<E> out;
  for (const auto& s : stages)
    for (const E& x : s) out.push_back(x);
  return out;
}

// The stage-n index set: ideals whose supremum was first boxed strictly
// after their own turn, plus index n-1 whenever its supremum is boxed at
// all. Indices past the end of a finite stream are skipped. The same
// formula drives every stage from the second on; the early stages are its
// degenerate instances.
template <class E>
std::vector<Nat> stage_index_set(const EnumerablePoset<E>& p,
                                 const std::vector<std::vector<E>>& stages,
                                 std::size_t n) {
  std::vector<Nat> idx;
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    if (!p.ideals.has(Nat(i))) continue;
    IdealDescriptor<E> ideal = p.ideals.at(Nat(i));
    if (!in_up_union(p.order, stages, 1, i, ideal.supremum) &&
        in_up_union(p.order, stages, i + 1, n - 1, ideal.supremum))
      idx.push_back(Nat(i));
  }
  if (p.ideals.has(Nat(n - 1))) {
    IdealDescriptor<E> ideal = p.ideals.at(Nat(n - 1));
    if (in_up_union(p.order, stages, 1, n - 1, ideal.supremum))
      idx.push_back(Nat(n - 1));
  }
  return idx;
}

}  // namespace detail

// Stage n = 1: the start point alone. Each later stage computes the index
// set, then picks one witness per listed ideal, smallest first, such that
// the witness times the other factor's accumulated picks stays inside u.
// The right factor's picks must clear the left factor's stage-n additions
// as well, so the left side always moves first within a stage.
template <class A, class B>
StageState<A, B> run_stages(const EnumerablePoset<A>& p,
                            const EnumerablePoset<B>& q,
                            const ProductOpenOracle<A, B>& u,
                            const std::pair<A, B>& start,
                            std::size_t max_stage, std::size_t pick_cap = 4096) {
  if (max_stage < 1)
    throw precondition_violation("run_stages: max_stage must be at least 1");
  if (!u.contains(start.first, start.second))
    throw precondition_violation("run_stages: start point is outside the open set");

  StageState<A, B> st;
  st.A_stages.push_back({start.first});
  st.B_stages.push_back({start.second});
  st.n = 1;

  auto check_containment = [&] {
    for (const A& a : detail::union_of(st.A_stages))
      for (const B& b : detail::union_of(st.B_stages))
        if (!u.contains(a, b))
          throw std::logic_error("stage containment invariant broke at stage " +
                                 std::to_string(st.n));
  };
  check_containment();

  for (std::size_t n = 2; n <= max_stage; ++n) {
    st.E = detail::stage_index_set(p, st.A_stages, n);
    std::vector<A> stage_a;
    const std::vector<B> bs = detail::union_of(st.B_stages);
    for (const Nat& i : st.E) {
      IdealDescriptor<A> ideal = p.ideals.at(i);
      std::function<bool(const A&)> pred = [&](const A& d) {
        for (const B& b : bs)
          if (!u.contains(d, b)) return false;
        return true;
      };
      try {
        stage_a.push_back(pick_above(ideal, std::vector<A>{}, pred,
                                     p.order.leq, pick_cap));
      } catch (const oracle_not_scott_open& e) {
        throw oracle_not_scott_open(std::string(e.what()) +
                                    " (left factor, stage " + std::to_string(n) + ")");
      }
    }
    st.A_stages.push_back(std::move(stage_a));
    st.E_history.push_back(st.E);

    st.F = detail::stage_index_set(q, st.B_stages, n);
    std::vector<B> stage_b;
    const std::vector<A> as = detail::union_of(st.A_stages);
    for (const Nat& i : st.F) {
      IdealDescriptor<B> ideal = q.ideals.at(i);
      std::function<bool(const B&)> pred = [&](const B& d) {
        for (const A& a : as)
          if (!u.contains(a, d)) return false;
        return true;
      };
      try {
        stage_b.push_back(pick_above(ideal, std::vector<B>{}, pred,
                                     q.order.leq, pick_cap));
      } catch (const oracle_not_scott_open& e) {
        throw oracle_not_scott_open(std::string(e.what()) +
                                    " (right factor, stage " + std::to_string(n) + ")");
      }
    }
    st.B_stages.push_back(std::move(stage_b));
    st.F_history.push_back(st.F);

    st.n = n;
    check_containment();
  }
  return st;
}

// Declared-ideal openness of the up-closure of a finite set: every ideal the
// run consulted whose supremum lies in the up-closure must already be met by
// the set itself. A check against the declared family, not a proof over all
// directed sets.
template <class E, class A, class B>
bool upclosure_is_scott_open(const EnumerablePoset<E>& p,
                             const std::vector<E>& a,
                             const StageState<A, B>& stages) {
  for (std::size_t i = 1; i + 1 <= stages.n; ++i) {
    if (!p.ideals.has(Nat(i))) break;
    IdealDescriptor<E> ideal = p.ideals.at(Nat(i));
    bool sup_boxed = false;
    for (const E& x : a)
      if (p.order.leq(x, ideal.supremum)) {
        sup_boxed = true;
        break;
      }
    if (!sup_boxed) continue;
    bool met = false;
    for (const E& x : a)
      if (ideal.contains(x)) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

// Cartesian product with the coordinatewise order.
inline FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q) {
  std::size_t np = p.size(), nq = q.size(), n = np * nq;
  auto id = [&](std::size_t i, std::size_t j) { return i * nq + j; };
  std::vector<std::string> labels(n);
  std::vector<ElemSet> rel(n, ElemSet(n));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nq; ++j) {
      labels[id(i, j)] = "(" + p.labels()[i] + "," + q.labels()[j] + ")";
      for (std::size_t i2 = 0; i2 < np; ++i2)
        for (std::size_t j2 = 0; j2 < nq; ++j2)
          if (p.leq(i, i2) && q.leq(j, j2)) rel[id(i, j)].set(id(i2, j2));
    }
  return FinitePoset::from_leq(std::move(labels), rel);
}

// Human-readable stage log, one line per stage.
template <class A, class B>
std::vector<std::string> stage_trace_lines(const EnumerablePoset<A>& p,
                                           const EnumerablePoset<B>& q,
                                           const StageState<A, B>& st) {
  auto set_str = [](const auto& xs, const auto& str) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ", ";
      s += str(xs[i]);
    }
    return s + "}";
  };
  auto idx_str = [&](const std::vector<Nat>& xs) {
    return set_str(xs, [](const Nat& n) { return nat_str(n); });
  };
  std::vector<std::string> lines;
  for (std::size_t k = 1; k <= st.n; ++k) {
    std::string line = "stage " + std::to_string(k) + ": ";
    if (k >= 2)
      line += "E = " + idx_str(st.E_history[k - 2]) + ", F = " +
              idx_str(st.F_history[k - 2]) + ", ";
    line += "A = " + set_str(st.A_stages[k - 1], p.str) +
            ", B = " + set_str(st.B_stages[k - 1], q.str);
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace scottkit
