#pragma once

#include <scottkit/bignat.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace scottkit {

// Finite sequence of naturals >= 1. The empty sequence appears only as an
// intermediate value (e.g. a longest common prefix); the order-theoretic
// carriers use nonempty sequences.
using Seq = std::vector<Nat>;

inline bool seq_entries_valid(const Seq& s) {
  return std::all_of(s.begin(), s.end(), [](const Nat& x) { return x >= 1; });
}

// weight(s) = |s| + sum(s). Entries are >= 1, so weight >= 2*|s| for |s| >= 1,
// and a proper extension strictly increases weight.
inline Nat seq_weight(const Seq& s) {
  Nat w = s.size();
  for (const Nat& x : s) w += x;
  return w;
}

inline bool is_prefix(const Seq& s, const Seq& t) {
  if (s.size() > t.size()) return false;
  return std::equal(s.begin(), s.end(), t.begin());
}

inline bool is_proper_prefix(const Seq& s, const Seq& t) {
  return s.size() < t.size() && is_prefix(s, t);
}

inline Seq longest_common_prefix(const Seq& s, const Seq& t) {
  Seq out;
  std::size_t n = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < n && s[i] == t[i]; ++i) out.push_back(s[i]);
  return out;
}

inline bool lex_less(const Seq& s, const Seq& t) {
  return std::lexicographical_compare(s.begin(), s.end(), t.begin(), t.end());
}

inline Seq seq_drop_last(const Seq& s) {
  if (s.empty()) throw precondition_violation("seq_drop_last: empty sequence");
  return Seq(s.begin(), s.end() - 1);
}

inline Seq seq_append(Seq s, const Nat& x) {
  s.push_back(x);
  return s;
}

inline std::string seq_str(const Seq& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i].str();
  }
  out += "]";
  return out;
}

}  // namespace scottkit
