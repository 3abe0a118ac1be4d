#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scottkit/bignat.hpp"
#include "scottkit/ifamily.hpp"
#include "scottkit/poset_p.hpp"
#include "scottkit/sequences.hpp"

namespace scottkit {

// Membership oracle for a would-be Scott-open subset of the column poset.
struct POpenOracle {
  std::string name;
  std::function<bool(const PElem&)> contains;
};

// Scott-open completion of a set of full columns. A column is filled when
// seeded, or when one of its three feeder columns is filled: every
// cross-column strict step runs from a feeder point up to an encoded
// column's top, so closing under decoding makes the union of filled columns
// an upper set; and a maximal-element-free directed set lives inside a
// single column, whose top lies in the union exactly when the column is
// filled, so the completion is inaccessible by directed sups as well.
class ColumnOpen {
 public:
  explicit ColumnOpen(std::vector<Nat> seed_cols) {
    for (Nat& c : seed_cols) {
      if (c < 1) throw precondition_violation("ColumnOpen: columns start at 1");
      seeds_.insert(std::move(c));
    }
  }

  bool filled(const Nat& col) const {
    auto it = memo_.find(col);
    if (it != memo_.end()) return it->second;
    bool r = seeds_.count(col) > 0;
    if (!r) {
      if (auto d = f_decode(col)) {
        r = filled(d->m) || (d->s.size() == 1 && filled(d->n)) ||
            (d->s.size() >= 2 &&
             filled(f_apply(d->m, d->n, seq_drop_last(d->s))));
      }
    }
    memo_.emplace(col, r);
    return r;
  }

  bool contains(const PElem& x) const { return filled(x.col); }

  const std::set<Nat>& seeds() const { return seeds_; }

 private:
  std::set<Nat> seeds_;
  mutable std::map<Nat, bool> memo_;
};

inline POpenOracle column_open_oracle(std::vector<Nat> seed_cols) {
  auto co = std::make_shared<ColumnOpen>(std::move(seed_cols));
  std::string name = "columns{";
  bool first = true;
  for (const Nat& c : co->seeds()) {
    if (!first) name += ",";
    name += nat_str(c);
    first = false;
  }
  name += "}";
  return POpenOracle{std::move(name),
                     [co](const PElem& x) { return co->contains(x); }};
}

// One probe of the witness walk: the natural accepted by the second oracle
// in its current column, and whether the first oracle then admitted the
// accumulated sequence back in its own column.
struct WitnessStep {
  PElem probe;
  bool u_accepted = false;
};

struct IrreducibilityTrace {
  bool swapped = false;  // roles exchanged so the u-side column is smaller
  PElem z;               // common point, always a column top
  Seq prefix;            // the naturals accumulated along the walk
  std::vector<WitnessStep> steps;
};

// Common point of two nonempty opens. Seeds in the same column meet at that
// column's top. Otherwise the walk alternates: pull a natural out of the
// second open in its current column, hop to the encoded column's top, and
// stop as soon as the first open admits the accumulated sequence in its own
// column; the final encoded top then lies in both. Deterministic: every
// probe takes the smallest admissible natural.
inline IrreducibilityTrace irreducibility_witness_trace(
    const PElem& u_seed, const PElem& v_seed, const POpenOracle& u,
    const POpenOracle& v, std::size_t depth = 32) {
  if (depth < 1) throw precondition_violation("irreducibility_witness: depth must be at least 1");
  if (!u.contains(u_seed))
    throw precondition_violation("irreducibility_witness: first oracle rejects its seed");
  if (!v.contains(v_seed))
    throw precondition_violation("irreducibility_witness: second oracle rejects its seed");

  IrreducibilityTrace tr;
  Nat n0 = u_seed.col, m0 = v_seed.col;
  if (n0 == m0) {
    tr.z = PElem{n0, LTop{}};
    if (!u.contains(tr.z) || !v.contains(tr.z))
      throw oracle_not_scott_open(
          "irreducibility_witness: an oracle holds a point of column " +
          nat_str(n0) + " but not the column top above it");
    return tr;
  }
  const POpenOracle* pu = &u;
  const POpenOracle* pv = &v;
  if (n0 > m0) {
    std::swap(n0, m0);
    std::swap(pu, pv);
    tr.swapped = true;
  }

  Nat step_col = m0;
  for (std::size_t k = 1; k <= depth; ++k) {
    std::optional<Nat> a;
    for (Nat cand = 1; cand <= Nat(depth); ++cand)
      if (pv->contains(PElem{step_col, cand})) {
        a = cand;
        break;
      }
    if (!a)
      throw oracle_not_scott_open(
          "irreducibility_witness: \"" + pv->name +
          "\" holds the top of column " + nat_str(step_col) +
          " but no natural beneath it");
    tr.prefix.push_back(*a);
    bool hit = pu->contains(PElem{n0, tr.prefix});
    tr.steps.push_back(WitnessStep{PElem{step_col, *a}, hit});
    if (hit) {
      tr.z = PElem{f_apply(n0, m0, tr.prefix), LTop{}};
      if (!pu->contains(tr.z) || !pv->contains(tr.z))
        throw oracle_not_scott_open(
            "irreducibility_witness: constructed top " + pelem_str(tr.z) +
            " rejected by an oracle claiming Scott-openness");
      return tr;
    }
    step_col = f_apply(n0, m0, tr.prefix);
  }
  throw oracle_not_scott_open(
      "irreducibility_witness: \"" + pu->name +
      "\" holds the top of column " + nat_str(n0) +
      " but admitted no sequence prefix within depth " + std::to_string(depth));
}

inline PElem irreducibility_witness(const PElem& u_seed, const PElem& v_seed,
                                    const POpenOracle& u, const POpenOracle& v,
                                    std::size_t depth = 32) {
  return irreducibility_witness_trace(u_seed, v_seed, u, v, depth).z;
}

// Render the walk for trace output, one line per step plus the result.
inline std::vector<std::string> witness_trace_lines(const IrreducibilityTrace& tr) {
  std::vector<std::string> lines;
  if (tr.swapped) lines.push_back("roles swapped: walking from the smaller column");
  for (std::size_t k = 0; k < tr.steps.size(); ++k)
    lines.push_back("step " + std::to_string(k + 1) + ": probe " +
                    pelem_str(tr.steps[k].probe) +
                    (tr.steps[k].u_accepted ? ", prefix admitted" : ", prefix refused"));
  lines.push_back("common point: " + pelem_str(tr.z));
  return lines;
}

}  // namespace scottkit
