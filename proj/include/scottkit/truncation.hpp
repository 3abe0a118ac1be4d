#pragma once

#include <scottkit/finite_poset.hpp>
#include <scottkit/melem.hpp>
#include <scottkit/mono_inj.hpp>
#include <scottkit/poset_p.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scottkit {

// Finite window of the column poset: columns 1..col_max, each carrying nats
// 1..nat_max, all sequences of weight <= weight_max, and the column top.
// The order table is computed pair-by-pair from the symbolic comparison, so
// the window doubles as an exhaustive test bed for it.
struct Truncation {
  Nat col_max, weight_max, nat_max;
  std::vector<PElem> elems;
  FinitePoset poset;  // ids parallel to elems
  std::map<std::string, std::size_t> index;

  std::optional<std::size_t> find(const PElem& x) const {
    auto it = index.find(pelem_str(x));
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  // {z in window : z <= x}, for window members.
  const ElemSet& down_of(std::size_t id) const { return poset.down_row(id); }

  // {z in window : z in the denotation}.
  ElemSet restrict_denotation(const MElem& e) const {
    ElemSet out(elems.size());
    auto blobs = denotation_blobs(e);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (const Blob& b : blobs)
        if (blob_contains(b, elems[i])) {
          out.set(i);
          break;
        }
    return out;
  }
};

inline Truncation build_truncation(const Nat& col_max, const Nat& weight_max,
                                   const Nat& nat_max) {
  if (col_max < 1 || nat_max < 1 || weight_max < 2)
    throw precondition_violation("build_truncation: degenerate bounds");
  Truncation t;
  t.col_max = col_max;
  t.weight_max = weight_max;
  t.nat_max = nat_max;
  std::vector<Seq> seqs = sequences_up_to_weight(weight_max);
  for (Nat c = 1; c <= col_max; ++c) {
    for (Nat k = 1; k <= nat_max; ++k) t.elems.push_back(PElem{c, k});
    for (const Seq& s : seqs) t.elems.push_back(PElem{c, s});
    t.elems.push_back(PElem{c, LTop{}});
  }
  std::size_t n = t.elems.size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = pelem_str(t.elems[i]);
    t.index[labels[i]] = i;
  }
  std::vector<ElemSet> rel(n, ElemSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    rel[i].set(i);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && strictly_below(t.elems[i], t.elems[j])) rel[i].set(j);
  }
  t.poset = FinitePoset::from_leq(std::move(labels), rel);
  return t;
}

// Square window: per-column nat tail as deep as there are columns.
inline Truncation truncation(const Nat& col_max, const Nat& seq_weight_max) {
  return build_truncation(col_max, seq_weight_max, col_max);
}

}  // namespace scottkit
