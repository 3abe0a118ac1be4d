#pragma once

#include <scottkit/bignat.hpp>
#include <scottkit/ifamily.hpp>
#include <scottkit/lattice_l.hpp>
#include <scottkit/sequences.hpp>

#include <optional>
#include <string>

namespace scottkit {

// Element of the column poset: a column index (natural >= 1) paired with a
// fibre value. Within a column the fibre order applies; across columns the
// only strict steps target a column top (q, top) whose index decodes under
// f, in one of four ways (optionally preceded by a step inside the column):
//   rise:        (n, s)        < (f_{n,k}(s), top)
//   drop_single: (n, x)        < (f_{d,n}([x]), top)          with d < n
//   drop_tail:   (f_{a,b}(s), x) < (f_{a,b}(s.x), top)
// plus the within-column order itself.
struct PElem {
  Nat col;
  LElem val;

  friend bool operator==(const PElem& a, const PElem& b) {
    return a.col == b.col && a.val == b.val;
  }
};

inline bool pelem_valid(const PElem& p) { return p.col >= 1 && lelem_valid(p.val); }

enum class StrictRule {
  within_column,       // same column, fibre-strict
  rise,                // seq s, target column f_{a,b}(s) with a = source column
  rise_extend,         // seq s, proper prefix of t, target column f_{a,b}(t)
  drop_single,         // nat x, target decodes to (a, source, [x])
  drop_single_extend,  // nat x < x', target decodes to (a, source, [x'])
  drop_tail,           // nat x, target decodes to (a, b, s.x), f_{a,b}(s) = source
  drop_tail_extend     // nat x < x', target decodes to (a, b, s.x')
};

// Proof term for a strict comparison. Verifiable independently of the
// procedure that produced it: see strict_witness_replay.
struct StrictWitness {
  StrictRule rule;
  Nat a, b;  // decoded pair of the target column (unused for within_column)
  Seq t;     // decoded sequence of the target column (unused for within_column)
};

inline const char* strict_rule_name(StrictRule r) {
  switch (r) {
    case StrictRule::within_column: return "within_column";
    case StrictRule::rise: return "rise";
    case StrictRule::rise_extend: return "rise_extend";
    case StrictRule::drop_single: return "drop_single";
    case StrictRule::drop_single_extend: return "drop_single_extend";
    case StrictRule::drop_tail: return "drop_tail";
    case StrictRule::drop_tail_extend: return "drop_tail_extend";
  }
  return "?";
}

// Decides x < y and returns a replayable witness.
inline std::optional<StrictWitness> strictly_below(const PElem& x, const PElem& y) {
  if (!pelem_valid(x) || !pelem_valid(y))
    throw precondition_violation("strictly_below: malformed element");
  if (x.col == y.col) {
    if (lt_L(x.val, y.val)) return StrictWitness{StrictRule::within_column, 0, 0, {}};
    return std::nullopt;
  }
  // Across columns everything funnels into a decodable column top.
  if (!is_top(y.val)) return std::nullopt;
  std::optional<FImage> d = f_decode(y.col);
  if (!d) return std::nullopt;
  if (const Seq* s = std::get_if<Seq>(&x.val)) {
    if (d->m == x.col) {
      if (*s == d->s) return StrictWitness{StrictRule::rise, d->m, d->n, d->s};
      if (is_proper_prefix(*s, d->s))
        return StrictWitness{StrictRule::rise_extend, d->m, d->n, d->s};
    }
    return std::nullopt;
  }
  if (const Nat* k = std::get_if<Nat>(&x.val)) {
    if (d->s.size() == 1 && d->n == x.col) {
      if (d->s[0] == *k) return StrictWitness{StrictRule::drop_single, d->m, d->n, d->s};
      if (*k < d->s[0])
        return StrictWitness{StrictRule::drop_single_extend, d->m, d->n, d->s};
      return std::nullopt;
    }
    if (d->s.size() >= 2 && f_apply(d->m, d->n, seq_drop_last(d->s)) == x.col) {
      if (d->s.back() == *k) return StrictWitness{StrictRule::drop_tail, d->m, d->n, d->s};
      if (*k < d->s.back())
        return StrictWitness{StrictRule::drop_tail_extend, d->m, d->n, d->s};
    }
    return std::nullopt;
  }
  return std::nullopt;  // a column top has nothing above it elsewhere
}

// Re-derives the comparison claimed by a witness from first principles.
inline bool strict_witness_replay(const StrictWitness& w, const PElem& x, const PElem& y) {
  switch (w.rule) {
    case StrictRule::within_column:
      return x.col == y.col && lt_L(x.val, y.val);
    case StrictRule::rise:
      return is_top(y.val) && w.a == x.col && x.val == LElem{w.t} &&
             f_apply(w.a, w.b, w.t) == y.col;
    case StrictRule::rise_extend: {
      const Seq* s = std::get_if<Seq>(&x.val);
      return is_top(y.val) && s && w.a == x.col && is_proper_prefix(*s, w.t) &&
             f_apply(w.a, w.b, w.t) == y.col;
    }
    case StrictRule::drop_single: {
      const Nat* k = std::get_if<Nat>(&x.val);
      return is_top(y.val) && k && w.b == x.col && w.t.size() == 1 && w.t[0] == *k &&
             f_apply(w.a, w.b, w.t) == y.col;
    }
    case StrictRule::drop_single_extend: {
      const Nat* k = std::get_if<Nat>(&x.val);
      return is_top(y.val) && k && w.b == x.col && w.t.size() == 1 && *k < w.t[0] &&
             f_apply(w.a, w.b, w.t) == y.col;
    }
    case StrictRule::drop_tail: {
      const Nat* k = std::get_if<Nat>(&x.val);
      return is_top(y.val) && k && w.t.size() >= 2 && w.t.back() == *k &&
             f_apply(w.a, w.b, seq_drop_last(w.t)) == x.col &&
             f_apply(w.a, w.b, w.t) == y.col;
    }
    case StrictRule::drop_tail_extend: {
      const Nat* k = std::get_if<Nat>(&x.val);
      return is_top(y.val) && k && w.t.size() >= 2 && *k < w.t.back() &&
             f_apply(w.a, w.b, seq_drop_last(w.t)) == x.col &&
             f_apply(w.a, w.b, w.t) == y.col;
    }
  }
  return false;
}

inline bool lt_P(const PElem& x, const PElem& y) { return strictly_below(x, y).has_value(); }

inline bool leq_P(const PElem& x, const PElem& y) { return x == y || lt_P(x, y); }

inline std::string pelem_str(const PElem& p) {
  return "(" + p.col.str() + "|" + lelem_str(p.val) + ")";
}

inline std::optional<PElem> pelem_parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') return std::nullopt;
  std::size_t bar = text.find('|');
  if (bar == std::string::npos) return std::nullopt;
  std::string col_part = text.substr(1, bar - 1);
  if (col_part.empty()) return std::nullopt;
  for (char c : col_part)
    if (c < '0' || c > '9') return std::nullopt;
  Nat col(col_part);
  if (col < 1) return std::nullopt;
  auto val = lelem_parse(text.substr(bar + 1, text.size() - bar - 2));
  if (!val) return std::nullopt;
  return PElem{col, *val};
}

}  // namespace scottkit
