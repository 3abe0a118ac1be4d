#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "intersect.hpp"
#include "melem.hpp"
#include "truncation.hpp"

// R = M with a top adjoined, and F = the finitely generated down-sets of R.
// Suprema in R exploit that M is a closure system: the least upper bound of a
// finite point set is the intersection of all canonical sets containing it,
// and a small candidate family provably suffices for that intersection.

namespace scottkit {

struct TopR {
  friend bool operator==(TopR, TopR) { return true; }
};

using RElem = std::variant<MElem, TopR>;

inline bool is_top_r(const RElem& x) { return std::holds_alternative<TopR>(x); }
inline RElem top_r() { return TopR{}; }
inline RElem bottom_r() { return melem_empty(); }

inline bool leq_R(const RElem& a, const RElem& b) {
  if (is_top_r(b)) return true;
  if (is_top_r(a)) return false;
  return subset(std::get<MElem>(a), std::get<MElem>(b));
}

inline std::string relem_str(const RElem& x) {
  return is_top_r(x) ? "top" : melem_str(std::get<MElem>(x));
}

inline std::optional<RElem> relem_parse(const std::string& text) {
  if (text == "top") return top_r();
  auto e = melem_parse(text);
  if (!e) return std::nullopt;
  return RElem{*e};
}

inline RElem meet_R(const RElem& a, const RElem& b) {
  if (is_top_r(a)) return b;
  if (is_top_r(b)) return a;
  return intersect(std::get<MElem>(a), std::get<MElem>(b));
}

// Directed suprema inside M. A chain that is still strictly growing at its
// end is read as a prefix of the evident infinite pattern, so growth-capable
// tags idealize to the pattern's limit (the column top the chain fills in).
// Tags that cannot grow unboundedly return their maximum, matching the fact
// that such families strictly increase only finitely often.
inline MElem directed_sup(const std::vector<MElem>& chain) {
  if (chain.empty()) throw precondition_violation("directed_sup: empty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!subset(chain[i], chain[i + 1]))
      throw precondition_violation("directed_sup: not an increasing chain");
  const MElem& last = chain.back();
  if (chain.size() == 1 || chain[chain.size() - 2] == last) return last;
  switch (last.tag) {
    case MTag::type_i:
      return classify_principal(PElem{last.n, LTop{}});
    case MTag::type_ii:
      return classify_principal(PElem{last.m, LTop{}});
    case MTag::type_i_ii_2:
      return classify_principal(PElem{f_apply(last.m, last.n, last.s), LTop{}});
    default:
      return last;
  }
}

namespace detail {

// What a finite point set demands of each column: the whole fibre, a deepest
// sequence (all demanded sequences form a prefix chain), or a largest numeral.
struct ColDemand {
  enum Kind { full, seq, nat } kind;
  Seq u;
  Nat k;
};

inline std::map<Nat, ColDemand> column_demands(const std::vector<PElem>& pts) {
  std::map<Nat, ColDemand> out;
  for (const PElem& x : pts) {
    auto it = out.find(x.col);
    if (it == out.end()) {
      ColDemand d{ColDemand::full, {}, Nat(0)};
      if (const Seq* s = std::get_if<Seq>(&x.val))
        d = ColDemand{ColDemand::seq, *s, Nat(0)};
      else if (const Nat* k = std::get_if<Nat>(&x.val))
        d = ColDemand{ColDemand::nat, {}, *k};
      out.emplace(x.col, std::move(d));
      continue;
    }
    ColDemand& d = it->second;
    if (d.kind == ColDemand::full) continue;
    if (std::holds_alternative<LTop>(x.val)) {
      d = ColDemand{ColDemand::full, {}, Nat(0)};
    } else if (const Seq* s = std::get_if<Seq>(&x.val)) {
      if (d.kind == ColDemand::nat)
        d = ColDemand{ColDemand::full, {}, Nat(0)};
      else if (is_prefix(*s, d.u))
        ;  // already covered
      else if (is_prefix(d.u, *s))
        d.u = *s;
      else
        d = ColDemand{ColDemand::full, {}, Nat(0)};  // incomparable sequences
    } else {
      const Nat& k = std::get<Nat>(x.val);
      if (d.kind == ColDemand::seq)
        d = ColDemand{ColDemand::full, {}, Nat(0)};
      else if (d.k < k)
        d.k = k;
    }
  }
  return out;
}

// Boundary-aware constructor for the two-piece union with a sequence part.
inline MElem make_union2(const Nat& m, const Nat& n, const Seq& s, const Nat& k) {
  if (s.size() == 1 && k <= s[0]) return melem_i_ii_1(m, f_apply(m, n, s), s, k);
  return melem_i_ii_2(m, n, s, k);
}

// Candidate upper bounds for the demanded columns. Completeness argument:
// every principal ideal containing the points either tops a demanded column,
// or pairs one sequence column with one numeral column through the encoding,
// in which case one of the union-shaped candidates below is a subset of it.
// Folding the surviving candidates with intersect therefore reaches the least
// canonical set containing the points.
inline std::vector<MElem> upper_bound_candidates(const std::map<Nat, ColDemand>& dem) {
  std::vector<MElem> out;
  for (const auto& [c, d] : dem) {
    out.push_back(classify_principal(PElem{c, LTop{}}));
    if (d.kind == ColDemand::seq) out.push_back(melem_i(c, d.u));
    if (d.kind == ColDemand::nat) out.push_back(melem_ii(c, d.k));
  }
  if (dem.size() != 2) return out;
  auto a = dem.begin();
  auto b = std::next(a);
  const std::pair<const Nat, ColDemand>* sd = nullptr;
  const std::pair<const Nat, ColDemand>* nd = nullptr;
  if (a->second.kind == ColDemand::seq && b->second.kind == ColDemand::nat) {
    sd = &*a;
    nd = &*b;
  } else if (a->second.kind == ColDemand::nat && b->second.kind == ColDemand::seq) {
    sd = &*b;
    nd = &*a;
  }
  if (!sd) return out;
  const Nat& m = sd->first;
  const Seq& u = sd->second.u;
  const Nat& q = nd->first;
  const Nat& k = nd->second.k;
  if (m < q && u.size() == 1 && k <= u[0]) out.push_back(melem_iv(m, q, u));
  if (auto dec = f_decode(q); dec && dec->m == m) {
    const Seq& w = dec->s;
    if (u.size() == 1 && k <= u[0] && w[0] == u[0])
      out.push_back(melem_i_ii_1(m, q, u, k));
    if (is_prefix(u, w)) out.push_back(make_union2(m, dec->n, w, k));
    if (u.size() == w.size() + 1 && is_prefix(w, u) && k <= u.back())
      out.push_back(classify_principal(PElem{f_apply(m, dec->n, u), LTop{}}));
  }
  return out;
}

}  // namespace detail

// Least canonical set containing the given points, or nothing when only the
// adjoined top bounds them.
inline std::optional<MElem> least_m_containing(const std::vector<PElem>& pts) {
  if (pts.empty()) return melem_empty();
  auto cands = detail::upper_bound_candidates(detail::column_demands(pts));
  std::optional<MElem> acc;
  for (const MElem& c : cands) {
    bool all = true;
    for (const PElem& p : pts)
      if (!member(c, p)) {
        all = false;
        break;
      }
    if (!all) continue;
    acc = acc ? intersect(*acc, c) : c;
  }
  if (acc)
    for (const PElem& p : pts)
      if (!member(*acc, p))
        throw std::logic_error("least_m_containing: fold lost a demanded point");
  return acc;
}

inline RElem sup_R(const std::vector<RElem>& xs) {
  std::vector<PElem> pts;
  for (const RElem& x : xs) {
    if (is_top_r(x)) return top_r();
    for (const PElem& p : maximal_members(std::get<MElem>(x))) pts.push_back(p);
  }
  auto m = least_m_containing(pts);
  if (!m) return top_r();
  return RElem{*m};
}

inline RElem join_R(const RElem& a, const RElem& b) { return sup_R({a, b}); }

// ---- F: finitely generated down-sets of R as generator antichains ----

struct FElem {
  std::vector<RElem> gens;  // pairwise incomparable, sorted by display text

  friend bool operator==(const FElem& a, const FElem& b) { return a.gens == b.gens; }
};

inline FElem make_felem(std::vector<RElem> raw) {
  std::vector<RElem> keep;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < raw.size() && !dominated; ++j) {
      if (i == j) continue;
      if (!leq_R(raw[i], raw[j])) continue;
      // Of two equal generators keep the first occurrence only.
      if (leq_R(raw[j], raw[i]) && i < j) continue;
      dominated = true;
    }
    if (!dominated) keep.push_back(raw[i]);
  }
  std::sort(keep.begin(), keep.end(), [](const RElem& x, const RElem& y) {
    return relem_str(x) < relem_str(y);
  });
  return FElem{std::move(keep)};
}

inline FElem bottom_f() { return FElem{}; }

inline bool leq_F(const FElem& a, const FElem& b) {
  for (const RElem& g : a.gens) {
    bool covered = false;
    for (const RElem& h : b.gens)
      if (leq_R(g, h)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

inline FElem join_F(const FElem& a, const FElem& b) {
  std::vector<RElem> all = a.gens;
  all.insert(all.end(), b.gens.begin(), b.gens.end());
  return make_felem(std::move(all));
}

// Meets distribute over the generators: the intersection of two finitely
// generated down-sets is generated by the pairwise meets.
inline FElem meet_F(const FElem& a, const FElem& b) {
  std::vector<RElem> all;
  for (const RElem& g : a.gens)
    for (const RElem& h : b.gens) all.push_back(meet_R(g, h));
  return make_felem(std::move(all));
}

inline std::string felem_str(const FElem& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.gens.size(); ++i) {
    if (i) out += ", ";
    out += relem_str(a.gens[i]);
  }
  return out + "}";
}

inline MElem g_map(const PElem& x) { return classify_principal(x); }

inline FElem f_map_R(const RElem& x) { return FElem{{x}}; }

inline RElem g_map_F(const FElem& a) { return sup_R(a.gens); }

// sup is left adjoint to the principal-ideal embedding:
// g_map_F(a) <= x in R iff a <= f_map_R(x) in F. Both sides say every
// generator of a lies below x.
inline bool adjunction_left(const FElem& a, const RElem& x) {
  return leq_R(g_map_F(a), x);
}
inline bool adjunction_right(const FElem& a, const RElem& x) {
  return leq_F(a, f_map_R(x));
}
inline bool adjunction_holds(const FElem& a, const RElem& x) {
  return adjunction_left(a, x) == adjunction_right(a, x);
}

inline bool distributivity_check(const FElem& a, const FElem& b, const FElem& c) {
  FElem lhs = meet_F(a, join_F(b, c));
  FElem rhs = join_F(meet_F(a, b), meet_F(a, c));
  return lhs == rhs;
}

// ---- bounded enumeration of canonical forms ----

// Every canonical element whose numeric parameters and sequence weights stay
// within the bound. Used by the no-upper-bound record and by leastness checks
// that quantify over a finite candidate space.
inline std::vector<MElem> enumerate_canonical(const Nat& bound) {
  if (bound < 2 || bound > 16)
    throw precondition_violation("enumerate_canonical: bound out of range");
  std::vector<MElem> out;
  out.push_back(melem_empty());
  std::vector<Seq> seqs = sequences_up_to_weight(bound);
  for (Nat c = 1; c <= bound; ++c) {
    for (const Seq& s : seqs) out.push_back(melem_i(c, s));
    for (Nat k = 1; k <= bound; ++k) out.push_back(melem_ii(c, k));
    if (!f_decode(c)) out.push_back(melem_iii(c));
  }
  for (Nat m = 1; m < bound; ++m)
    for (Nat n = m + 1; n <= bound; ++n) {
      for (const Seq& s : seqs) {
        if (s.size() == 1) out.push_back(melem_iv(m, n, s));
        if (s.size() >= 2) out.push_back(melem_v(m, n, s));
        for (Nat k = 1; k <= bound; ++k) {
          if (s.size() == 1 && k <= s[0]) continue;  // boundary form
          out.push_back(melem_i_ii_2(m, n, s, k));
        }
      }
    }
  for (Nat c = 2; c <= bound; ++c) {
    auto d = f_decode(c);
    if (!d) continue;
    Seq s{d->s[0]};
    Nat cap = s[0] < bound ? s[0] : bound;
    for (Nat k = 1; k <= cap; ++k) out.push_back(melem_i_ii_1(d->m, c, s, k));
  }
  return out;
}

struct NoUpperBoundRecord {
  bool ok = false;
  Nat checked;
  std::string counterexample;  // empty when ok
};

// Machine-checked shape of "the image of P has no supremum in M": no
// canonical set contains two distinct column tops, in particular never both
// (1, top) and (2, top).
inline NoUpperBoundRecord no_upper_bound_witness(const Nat& bound = 12) {
  NoUpperBoundRecord rec;
  rec.checked = 0;
  for (const MElem& e : enumerate_canonical(bound)) {
    ++rec.checked;
    auto blobs = denotation_blobs(e);
    Nat tops = 0;
    for (Nat c = 1; c <= bound; ++c) {
      PElem t{c, LTop{}};
      for (const Blob& b : blobs)
        if (blob_contains(b, t)) {
          ++tops;
          break;
        }
    }
    if (tops > 1) {
      rec.ok = false;
      rec.counterexample = melem_str(e);
      return rec;
    }
  }
  rec.ok = true;
  return rec;
}

}  // namespace scottkit
