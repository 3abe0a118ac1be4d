#pragma once

#include <scottkit/melem.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace scottkit {

// Meet of two single-column pieces. Pieces in different columns are
// disjoint; within one column the kinds interact as:
//   full ∩ x    = x
//   seq ∩ seq   = common prefix (empty prefix means disjoint)
//   nat ∩ nat   = smaller bound
//   seq ∩ nat   = disjoint
// These are exactly the elementary steps the per-type case analysis reduces
// to once each side is written as its (at most three) column pieces.
inline std::optional<Blob> blob_meet(const Blob& a, const Blob& b) {
  if (a.col != b.col) return std::nullopt;
  if (a.kind == Blob::full && b.kind == Blob::full)
    throw std::logic_error("blob_meet: two full columns can only come from equal elements");
  if (a.kind == Blob::full) return b;
  if (b.kind == Blob::full) return a;
  if (a.kind != b.kind) return std::nullopt;
  if (a.kind == Blob::seq) {
    Seq p = longest_common_prefix(a.s, b.s);
    if (p.empty()) return std::nullopt;
    return Blob{Blob::seq, a.col, p, 0};
  }
  return Blob{Blob::nat, a.col, {}, a.k < b.k ? a.k : b.k};
}

// Rebuilds the canonical form of a set given as column pieces. Only shapes
// reachable as intersections of canonical elements are accepted; anything
// else trips a logic error rather than returning a non-canonical value.
inline MElem canonical_from_blobs(const std::vector<Blob>& blobs) {
  const Blob* seq_part = nullptr;
  const Blob* nat_part = nullptr;
  for (const Blob& b : blobs) {
    switch (b.kind) {
      case Blob::full:
        throw std::logic_error("canonical_from_blobs: full column in a proper intersection");
      case Blob::seq:
        if (seq_part) throw std::logic_error("canonical_from_blobs: two seq pieces");
        seq_part = &b;
        break;
      case Blob::nat:
        if (nat_part) throw std::logic_error("canonical_from_blobs: two nat pieces");
        nat_part = &b;
        break;
    }
  }
  if (!seq_part && !nat_part) return melem_empty();
  if (seq_part && !nat_part) return melem_i(seq_part->col, seq_part->s);
  if (!seq_part && nat_part) return melem_ii(nat_part->col, nat_part->k);
  if (seq_part->col == nat_part->col)
    throw std::logic_error("canonical_from_blobs: seq and nat piece share a column");
  // Two-column union: the nat column must decode compatibly, or the set
  // would not be an intersection of principal ideals at all.
  auto d = f_decode(nat_part->col);
  if (!d || d->m != seq_part->col)
    throw std::logic_error("canonical_from_blobs: nat column does not decode over the seq column");
  const Seq& s = seq_part->s;
  if (s.size() == 1 && nat_part->k <= s[0])
    return melem_i_ii_1(seq_part->col, nat_part->col, s, nat_part->k);
  if (d->s != s)
    throw std::logic_error("canonical_from_blobs: decoded sequence disagrees with the seq piece");
  return melem_i_ii_2(d->m, d->n, s, nat_part->k);
}

// Canonical intersection. Structured as: decompose both sides into their
// column pieces (the type definitions), meet piecewise (the elementary
// steps of the case analysis), reassemble canonically. Each call re-checks
// itself: the result's maxima must lie in both inputs, and every maximal
// element of one input lying in the other must survive into the result.
inline MElem intersect(const MElem& a, const MElem& b) {
  if (a == b) return a;
  MElem out;
  if (a.tag == MTag::empty || b.tag == MTag::empty) {
    out = melem_empty();
  } else {
    std::vector<Blob> pieces;
    for (const Blob& x : denotation_blobs(a))
      for (const Blob& y : denotation_blobs(b))
        if (auto z = blob_meet(x, y)) pieces.push_back(*z);
    out = canonical_from_blobs(pieces);
  }
#ifndef SCOTTKIT_SKIP_INTERSECT_GUARD
  for (const PElem& x : maximal_members(out))
    if (!member(a, x) || !member(b, x))
      throw std::logic_error("intersect: produced a point outside an input");
  for (const PElem& x : maximal_members(a))
    if (member(b, x) && !member(out, x))
      throw std::logic_error("intersect: dropped a shared maximal point");
  for (const PElem& x : maximal_members(b))
    if (member(a, x) && !member(out, x))
      throw std::logic_error("intersect: dropped a shared maximal point");
#endif
  return out;
}

}  // namespace scottkit
