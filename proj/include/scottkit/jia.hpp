#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scottkit/bignat.hpp"
#include "scottkit/finite_poset.hpp"
#include "scottkit/ideal_stream.hpp"

namespace scottkit {

// Point of the three-coordinate grid dcpo: two grid indices and a height
// that is either a natural or the column's own top.
struct JiaElem {
  Nat i, j;
  std::optional<Nat> m;  // nullopt is the column top
  bool operator==(const JiaElem&) const = default;
};

inline bool jia_valid(const JiaElem& x) {
  return x.i >= 1 && x.j >= 1 && (!x.m || *x.m >= 1);
}

inline JiaElem jia_fin(const Nat& i, const Nat& j, const Nat& m) {
  JiaElem x{i, j, m};
  if (!jia_valid(x)) throw precondition_violation("jia_fin: coordinates start at 1");
  return x;
}

inline JiaElem jia_inf(const Nat& i, const Nat& j) {
  JiaElem x{i, j, std::nullopt};
  if (!jia_valid(x)) throw precondition_violation("jia_inf: coordinates start at 1");
  return x;
}

// Same column: compare heights. Across columns: a finite point reaches
// exactly the tops of the next grid row whose second index clears its
// height. Cross steps cannot compose (their targets have no finite height),
// so this is transitive as written.
inline bool jia_leq(const JiaElem& x, const JiaElem& y) {
  if (!jia_valid(x) || !jia_valid(y))
    throw precondition_violation("jia_leq: malformed element");
  if (x.i == y.i && x.j == y.j) {
    if (!y.m) return true;
    if (!x.m) return false;
    return *x.m <= *y.m;
  }
  return y.i == x.i + 1 && !y.m.has_value() && x.m.has_value() && *x.m <= y.j;
}

inline std::string jia_str(const JiaElem& x) {
  return "(" + nat_str(x.i) + "," + nat_str(x.j) + "," +
         (x.m ? nat_str(*x.m) : "∞") + ")";
}

// Finite window: grid indices up to the bounds, heights up to m_max plus
// each column's top.
struct JiaTruncation {
  std::vector<JiaElem> elems;
  FinitePoset poset;
};

inline JiaTruncation jia_truncation(const Nat& i_max, const Nat& j_max,
                                    const Nat& m_max) {
  if (i_max < 1 || j_max < 1 || m_max < 1)
    throw precondition_violation("jia_truncation: bounds start at 1");
  JiaTruncation t;
  for (Nat i = 1; i <= i_max; ++i)
    for (Nat j = 1; j <= j_max; ++j) {
      for (Nat m = 1; m <= m_max; ++m) t.elems.push_back(jia_fin(i, j, m));
      t.elems.push_back(jia_inf(i, j));
    }
  std::size_t n = t.elems.size();
  std::vector<std::string> labels(n);
  std::vector<ElemSet> rel(n, ElemSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = jia_str(t.elems[a]);
    for (std::size_t b = 0; b < n; ++b)
      if (jia_leq(t.elems[a], t.elems[b])) rel[a].set(b);
  }
  t.poset = FinitePoset::from_leq(std::move(labels), rel);
  return t;
}

// Diagonal enumeration of the grid: 1 -> (1,1), 2 -> (1,2), 3 -> (2,1), ...
inline std::pair<Nat, Nat> jia_diagonal_pair(const Nat& r) {
  if (r < 1) throw precondition_violation("jia_diagonal_pair: 1-based");
  Nat s = 1;
  while (s * (s + 1) / 2 < r) s += 1;
  Nat idx = r - s * (s - 1) / 2;
  return {idx, s + 1 - idx};
}

inline IdealDescriptor<JiaElem> jia_column_ideal(const Nat& i, const Nat& j) {
  return IdealDescriptor<JiaElem>{
      "column(" + nat_str(i) + "," + nat_str(j) + ")",
      jia_inf(i, j),
      [i, j](const JiaElem& x) {
        return x.i == i && x.j == j && x.m.has_value();
      },
      [i, j](const Nat& r) { return jia_fin(i, j, r); },
  };
}

inline NonTrivialIdealStream<JiaElem> jia_ideal_stream() {
  return NonTrivialIdealStream<JiaElem>{
      [](const Nat& r) {
        auto [i, j] = jia_diagonal_pair(r);
        return jia_column_ideal(i, j);
      },
      std::nullopt,
  };
}

inline EnumerablePoset<JiaElem> jia_poset() {
  // A member that bounds the whole set is least outright (it sits below every
  // other bound by membership). Failing that, every bound is a column top,
  // and a single top covers several columns only when the upper-row members
  // share its column and the lower-row members reach it by the step clause;
  // a same-row spread meets an antichain of tops and has no least bound.
  auto sup = [](const std::vector<JiaElem>& xs) -> std::optional<JiaElem> {
    for (const JiaElem& cand : xs) {
      bool ub = true;
      for (const JiaElem& x : xs)
        if (!jia_leq(x, cand)) {
          ub = false;
          break;
        }
      if (ub) return cand;
    }
    if (xs.empty()) return std::nullopt;
    // a top in the set would itself have to be the bound, and was rejected
    for (const JiaElem& x : xs)
      if (!x.m) return std::nullopt;
    Nat lo = xs[0].i, hi = xs[0].i;
    for (const JiaElem& x : xs) {
      lo = std::min(lo, x.i);
      hi = std::max(hi, x.i);
    }
    if (hi != lo + 1) return std::nullopt;
    std::optional<Nat> col;
    for (const JiaElem& x : xs)
      if (x.i == hi) {
        if (col && *col != x.j) return std::nullopt;
        col = x.j;
      }
    JiaElem top = jia_inf(hi, *col);
    for (const JiaElem& x : xs)
      if (!jia_leq(x, top)) return std::nullopt;
    return top;
  };
  return EnumerablePoset<JiaElem>{
      "grid-dcpo",
      OrderOracle<JiaElem>{"grid-dcpo", jia_leq},
      jia_ideal_stream(),
      sup,
      jia_str,
  };
}

// Finite shadow of the noncoherence argument. Working inside the window of
// grid rows 1..2, columns 1..j_cap, heights 1..j_cap: the filters above
// (1,2,1) and (1,3,1) intersect in the second row's tops alone; the sets
// C_j (everything below some second-row top at column >= j, together with
// the whole first row) are closed and filtered, each meets that
// intersection, yet their running intersection with it shrinks to a single
// survivor at the window edge and to nothing beyond it.
struct JiaNoncoherenceRecord {
  Nat j_cap;
  Nat intersection_size = 0;   // filter intersection within the window
  bool intersection_matches = false;  // equals the second-row tops exactly
  bool closed_family = false;  // every C_j is a window down-set, sup-closed
  bool filtered = false;       // C_{j+1} inside C_j
  bool meets_all = false;      // intersection meets every C_j in the window
  Nat survivors_at_cap = 0;    // intersection points inside all C_j, j <= j_cap
  bool empty_beyond_window = false;
  bool ok = false;
};

inline JiaNoncoherenceRecord jia_noncoherence_witness(const Nat& j_cap) {
  if (j_cap < 2) throw precondition_violation("jia_noncoherence_witness: j_cap >= 2");
  JiaNoncoherenceRecord rec;
  rec.j_cap = j_cap;

  JiaTruncation t = jia_truncation(2, j_cap, j_cap);
  const std::vector<JiaElem>& e = t.elems;
  std::size_t n = e.size();

  auto filter_of = [&](const JiaElem& base) {
    ElemSet s(n);
    for (std::size_t a = 0; a < n; ++a)
      if (jia_leq(base, e[a])) s.set(a);
    return s;
  };
  ElemSet inter = filter_of(jia_fin(1, 2, 1)) & filter_of(jia_fin(1, 3, 1));

  ElemSet second_row_tops(n);
  for (std::size_t a = 0; a < n; ++a)
    if (e[a].i == 2 && !e[a].m) second_row_tops.set(a);
  rec.intersection_size = Nat(inter.count());
  rec.intersection_matches = (inter == second_row_tops);

  // C_j within the window: the whole first row, plus the second row from
  // column j on. (First-row points of every finite height lie below some
  // second-row top with large enough column, so the window keeps them all.)
  auto c_set = [&](const Nat& j) {
    ElemSet s(n);
    for (std::size_t a = 0; a < n; ++a)
      if (e[a].i == 1 || (e[a].i == 2 && e[a].j >= j)) s.set(a);
    return s;
  };

  rec.closed_family = true;
  rec.filtered = true;
  rec.meets_all = true;
  for (Nat j = 1; j <= j_cap; ++j) {
    ElemSet cj = c_set(j);
    if (!is_down_set(t.poset, cj)) rec.closed_family = false;
    // declared-ideal closure: a column whose finite part lies inside must
    // contribute its top as well
    for (Nat i = 1; i <= 2; ++i)
      for (Nat jj = 1; jj <= j_cap; ++jj) {
        bool fin_inside = true, top_inside = false;
        for (std::size_t a = 0; a < n; ++a) {
          if (e[a].i != i || e[a].j != jj) continue;
          if (e[a].m)
            fin_inside = fin_inside && cj.test(a);
          else
            top_inside = cj.test(a);
        }
        if (fin_inside && !top_inside) rec.closed_family = false;
      }
    if (j < j_cap && !(c_set(j + 1)).is_subset_of(cj)) rec.filtered = false;
    if (!(cj & inter).any()) rec.meets_all = false;
  }

  ElemSet running = inter;
  for (Nat j = 1; j <= j_cap; ++j) running &= c_set(j);
  rec.survivors_at_cap = Nat(running.count());
  // one step past the window the closed set keeps no second-row top at all
  rec.empty_beyond_window = !(running & c_set(j_cap + 1)).any();

  rec.ok = rec.intersection_matches && rec.closed_family && rec.filtered &&
           rec.meets_all && rec.survivors_at_cap == 1 && rec.empty_beyond_window;
  return rec;
}

}  // namespace scottkit
