#pragma once

#include <scottkit/bignat.hpp>
#include <scottkit/ifamily.hpp>
#include <scottkit/poset_p.hpp>

#include <optional>
#include <string>
#include <vector>

namespace scottkit {

// Canonical forms for the closure system of intersections of principal
// ideals of the column poset. Every such intersection is empty, a principal
// ideal of a non-top element, a principal ideal of a column top, or one of
// two bounded two-column unions; the eight-tag grammar below is closed under
// intersection (exercised exhaustively by the oracle tests).
//
// Denotations (L_c is the full column c):
//   empty
//   type_i(n; s)          = {(n, t) : t prefix of s}
//   type_ii(m; k)         = {(m, j) : j <= k}
//   type_iii(n)           = L_n, for n outside every reservoir
//   type_iv(m, n; s)      = L_{f(s)} ∪ {(m, s)} ∪ {(n, j) : j <= s[0]},   |s| = 1
//   type_v(m, n; s)       = L_{f(s)} ∪ {(m, t) : t prefix of s}
//                                    ∪ {(f(s minus last), j) : j <= s.back()},  |s| >= 2
//   type_i_ii_1(m, c; s; k) = {(m, s)} ∪ {(c, j) : j <= k},   |s| = 1, k <= s[0]
//   type_i_ii_2(m, n; s; k) = {(m, t) : t prefix of s} ∪ {(f(s), j) : j <= k}
// where f is taken at the pair written in the parameters.
//
// Side conditions keep every value inside the closure system:
//   - type_iii rejects reservoir members (their principal ideal is iv/v).
//   - type_i_ii_1's nat column c must itself decode as (m, b, u) with
//     u[0] = s[0]: otherwise the only principal ideal containing both
//     maxima already contains a full column, and the two-column union is
//     not an intersection of principal ideals.
//   - type_i_ii_2 with |s| = 1 and k <= s[0] is excluded: that set is
//     canonically type_i_ii_1 (its nat column f(s) decodes as required).
enum class MTag : unsigned char {
  empty,
  type_i,
  type_ii,
  type_iii,
  type_iv,
  type_v,
  type_i_ii_1,
  type_i_ii_2
};

struct MElem {
  MTag tag = MTag::empty;
  Nat m, n;  // columns / pair parameters; meaning depends on tag
  Seq s;
  Nat k;

  friend bool operator==(const MElem& a, const MElem& b) {
    return a.tag == b.tag && a.m == b.m && a.n == b.n && a.s == b.s && a.k == b.k;
  }
};

inline MElem melem_empty() { return MElem{}; }

inline MElem melem_i(const Nat& n, const Seq& s) {
  if (n < 1 || s.empty() || !seq_entries_valid(s))
    throw precondition_violation("type_i: need column >= 1 and nonempty sequence");
  return MElem{MTag::type_i, 0, n, s, 0};
}

inline MElem melem_ii(const Nat& m, const Nat& k) {
  if (m < 1 || k < 1) throw precondition_violation("type_ii: need column and bound >= 1");
  return MElem{MTag::type_ii, m, 0, {}, k};
}

inline MElem melem_iii(const Nat& n) {
  if (n < 1) throw precondition_violation("type_iii: column must be >= 1");
  if (f_decode(n)) throw precondition_violation("type_iii: column sits in a reservoir");
  return MElem{MTag::type_iii, 0, n, {}, 0};
}

inline MElem melem_iv(const Nat& m, const Nat& n, const Seq& s) {
  if (!(1 <= m && m < n)) throw precondition_violation("type_iv: need 1 <= m < n");
  if (s.size() != 1 || !seq_entries_valid(s))
    throw precondition_violation("type_iv: sequence must have length 1");
  return MElem{MTag::type_iv, m, n, s, 0};
}

inline MElem melem_v(const Nat& m, const Nat& n, const Seq& s) {
  if (!(1 <= m && m < n)) throw precondition_violation("type_v: need 1 <= m < n");
  if (s.size() < 2 || !seq_entries_valid(s))
    throw precondition_violation("type_v: sequence must have length >= 2");
  return MElem{MTag::type_v, m, n, s, 0};
}

inline MElem melem_i_ii_1(const Nat& m, const Nat& c, const Seq& s, const Nat& k) {
  if (s.size() != 1 || !seq_entries_valid(s))
    throw precondition_violation("type_i_ii_1: sequence must have length 1");
  if (!(1 <= k && k <= s[0]))
    throw precondition_violation("type_i_ii_1: need 1 <= k <= s[0]");
  auto d = f_decode(c);
  if (!d || d->m != m || d->s[0] != s[0])
    throw precondition_violation(
        "type_i_ii_1: nat column must decode to (m, *, u) with u starting like s");
  return MElem{MTag::type_i_ii_1, m, c, s, k};
}

inline MElem melem_i_ii_2(const Nat& m, const Nat& n, const Seq& s, const Nat& k) {
  if (!(1 <= m && m < n)) throw precondition_violation("type_i_ii_2: need 1 <= m < n");
  if (s.empty() || !seq_entries_valid(s))
    throw precondition_violation("type_i_ii_2: sequence must be nonempty");
  if (k < 1) throw precondition_violation("type_i_ii_2: need k >= 1");
  if (s.size() == 1 && k <= s[0])
    throw precondition_violation("type_i_ii_2: this boundary case is canonically type_i_ii_1");
  return MElem{MTag::type_i_ii_2, m, n, s, k};
}

// ---- denotation ------------------------------------------------------------

struct Blob {
  enum Kind { full, seq, nat } kind;
  Nat col;
  Seq s;  // seq blobs: the deepest sequence; members are its prefixes
  Nat k;  // nat blobs: the bound
};

// Per-tag decomposition into at most three single-column pieces, one column
// each. This is the type's definition, spelled set-theoretically.
inline std::vector<Blob> denotation_blobs(const MElem& e) {
  switch (e.tag) {
    case MTag::empty:
      return {};
    case MTag::type_i:
      return {Blob{Blob::seq, e.n, e.s, 0}};
    case MTag::type_ii:
      return {Blob{Blob::nat, e.m, {}, e.k}};
    case MTag::type_iii:
      return {Blob{Blob::full, e.n, {}, 0}};
    case MTag::type_iv:
      return {Blob{Blob::full, f_apply(e.m, e.n, e.s), {}, 0}, Blob{Blob::seq, e.m, e.s, 0},
              Blob{Blob::nat, e.n, {}, e.s[0]}};
    case MTag::type_v:
      return {Blob{Blob::full, f_apply(e.m, e.n, e.s), {}, 0}, Blob{Blob::seq, e.m, e.s, 0},
              Blob{Blob::nat, f_apply(e.m, e.n, seq_drop_last(e.s)), {}, e.s.back()}};
    case MTag::type_i_ii_1:
      return {Blob{Blob::seq, e.m, e.s, 0}, Blob{Blob::nat, e.n, {}, e.k}};
    case MTag::type_i_ii_2:
      return {Blob{Blob::seq, e.m, e.s, 0}, Blob{Blob::nat, f_apply(e.m, e.n, e.s), {}, e.k}};
  }
  return {};
}

inline bool blob_contains(const Blob& b, const PElem& x) {
  if (x.col != b.col) return false;
  switch (b.kind) {
    case Blob::full:
      return true;
    case Blob::seq: {
      const Seq* t = std::get_if<Seq>(&x.val);
      return t && is_prefix(*t, b.s);
    }
    case Blob::nat: {
      const Nat* j = std::get_if<Nat>(&x.val);
      return j && *j <= b.k;
    }
  }
  return false;
}

inline bool member(const MElem& e, const PElem& x) {
  for (const Blob& b : denotation_blobs(e))
    if (blob_contains(b, x)) return true;
  return false;
}

// The <= 2 maximal elements of the denotation.
inline std::vector<PElem> maximal_members(const MElem& e) {
  switch (e.tag) {
    case MTag::empty:
      return {};
    case MTag::type_i:
      return {PElem{e.n, e.s}};
    case MTag::type_ii:
      return {PElem{e.m, e.k}};
    case MTag::type_iii:
      return {PElem{e.n, LTop{}}};
    case MTag::type_iv:
    case MTag::type_v:
      return {PElem{f_apply(e.m, e.n, e.s), LTop{}}};
    case MTag::type_i_ii_1:
      return {PElem{e.m, e.s}, PElem{e.n, e.k}};
    case MTag::type_i_ii_2:
      return {PElem{e.m, e.s}, PElem{f_apply(e.m, e.n, e.s), e.k}};
  }
  return {};
}

// Order of the closure system: containment of denotations, decided by
// membership of the maximal elements.
inline bool subset(const MElem& a, const MElem& b) {
  for (const PElem& x : maximal_members(a))
    if (!member(b, x)) return false;
  return true;
}

// Canonical form of a principal ideal of the column poset.
inline MElem classify_principal(const PElem& x) {
  if (!pelem_valid(x)) throw precondition_violation("classify_principal: malformed element");
  if (const Seq* s = std::get_if<Seq>(&x.val)) return melem_i(x.col, *s);
  if (const Nat* k = std::get_if<Nat>(&x.val)) return melem_ii(x.col, *k);
  auto d = f_decode(x.col);
  if (!d) return melem_iii(x.col);
  if (d->s.size() == 1) return melem_iv(d->m, d->n, d->s);
  return melem_v(d->m, d->n, d->s);
}

inline const char* mtag_name(MTag t) {
  switch (t) {
    case MTag::empty: return "empty";
    case MTag::type_i: return "I";
    case MTag::type_ii: return "II";
    case MTag::type_iii: return "III";
    case MTag::type_iv: return "IV";
    case MTag::type_v: return "V";
    case MTag::type_i_ii_1: return "I+II1";
    case MTag::type_i_ii_2: return "I+II2";
  }
  return "?";
}

inline std::string melem_str(const MElem& e) {
  switch (e.tag) {
    case MTag::empty:
      return "empty";
    case MTag::type_i:
      return "I(" + e.n.str() + ";" + seq_str(e.s) + ")";
    case MTag::type_ii:
      return "II(" + e.m.str() + ";" + e.k.str() + ")";
    case MTag::type_iii:
      return "III(" + e.n.str() + ")";
    case MTag::type_iv:
      return "IV(" + e.m.str() + "," + e.n.str() + ";" + seq_str(e.s) + ")";
    case MTag::type_v:
      return "V(" + e.m.str() + "," + e.n.str() + ";" + seq_str(e.s) + ")";
    case MTag::type_i_ii_1:
      return "I+II1(" + e.m.str() + "," + e.n.str() + ";" + seq_str(e.s) + ";" + e.k.str() + ")";
    case MTag::type_i_ii_2:
      return "I+II2(" + e.m.str() + "," + e.n.str() + ";" + seq_str(e.s) + ";" + e.k.str() + ")";
  }
  return "?";
}

namespace detail {

inline std::optional<std::vector<std::string>> split_args(const std::string& text,
                                                          const std::string& head) {
  if (text.rfind(head + "(", 0) != 0 || text.back() != ')') return std::nullopt;
  std::string body = text.substr(head.size() + 1, text.size() - head.size() - 2);
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = body.find(';', pos);
    if (semi == std::string::npos) {
      parts.push_back(body.substr(pos));
      break;
    }
    parts.push_back(body.substr(pos, semi - pos));
    pos = semi + 1;
  }
  return parts;
}

inline std::optional<Nat> parse_plain_nat(const std::string& t) {
  if (t.empty()) return std::nullopt;
  for (char c : t)
    if (c < '0' || c > '9') return std::nullopt;
  return Nat(t);
}

inline std::optional<std::pair<Nat, Nat>> parse_nat_pair(const std::string& t) {
  std::size_t comma = t.find(',');
  if (comma == std::string::npos) return std::nullopt;
  auto a = parse_plain_nat(t.substr(0, comma));
  auto b = parse_plain_nat(t.substr(comma + 1));
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

inline std::optional<Seq> parse_seq_text(const std::string& t) {
  auto v = lelem_parse("s:" + t);
  if (!v) return std::nullopt;
  return std::get<Seq>(*v);
}

}  // namespace detail

inline std::optional<MElem> melem_parse(const std::string& text) {
  using detail::parse_nat_pair;
  using detail::parse_plain_nat;
  using detail::parse_seq_text;
  using detail::split_args;
  try {
    if (text == "empty") return melem_empty();
    if (auto p = split_args(text, "I")) {
      if (p->size() != 2) return std::nullopt;
      auto n = parse_plain_nat((*p)[0]);
      auto s = parse_seq_text((*p)[1]);
      if (!n || !s) return std::nullopt;
      return melem_i(*n, *s);
    }
    if (auto p = split_args(text, "II")) {
      if (p->size() != 2) return std::nullopt;
      auto m = parse_plain_nat((*p)[0]);
      auto k = parse_plain_nat((*p)[1]);
      if (!m || !k) return std::nullopt;
      return melem_ii(*m, *k);
    }
    if (auto p = split_args(text, "III")) {
      if (p->size() != 1) return std::nullopt;
      auto n = parse_plain_nat((*p)[0]);
      if (!n) return std::nullopt;
      return melem_iii(*n);
    }
    for (auto [head, len1] : {std::pair<const char*, bool>{"IV", true}, {"V", false}}) {
      if (auto p = split_args(text, head)) {
        if (p->size() != 2) return std::nullopt;
        auto mn = parse_nat_pair((*p)[0]);
        auto s = parse_seq_text((*p)[1]);
        if (!mn || !s) return std::nullopt;
        return len1 ? melem_iv(mn->first, mn->second, *s) : melem_v(mn->first, mn->second, *s);
      }
    }
    for (auto [head, first] : {std::pair<const char*, bool>{"I+II1", true}, {"I+II2", false}}) {
      if (auto p = split_args(text, head)) {
        if (p->size() != 3) return std::nullopt;
        auto mn = parse_nat_pair((*p)[0]);
        auto s = parse_seq_text((*p)[1]);
        auto k = parse_plain_nat((*p)[2]);
        if (!mn || !s || !k) return std::nullopt;
        return first ? melem_i_ii_1(mn->first, mn->second, *s, *k)
                     : melem_i_ii_2(mn->first, mn->second, *s, *k);
      }
    }
  } catch (const precondition_violation&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace scottkit
