#pragma once

#include <scottkit/bignat.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace scottkit {

using ElemSet = boost::dynamic_bitset<>;

// Finite poset over opaque element ids 0..n-1 with a display label per id.
// The order table is stored reflexive-transitive-closed; construction fails
// loudly on any axiom violation, so downstream code may assume validity.
class FinitePoset {
 public:
  FinitePoset() = default;

  // rel[i][j] means i <= j; must already be a partial order.
  static FinitePoset from_leq(std::vector<std::string> labels,
                              const std::vector<ElemSet>& rel) {
    FinitePoset p;
    p.labels_ = std::move(labels);
    p.up_ = rel;
    p.validate();
    p.fill_down();
    return p;
  }

  // covers[k] = (lo, hi) meaning lo < hi with nothing required between;
  // the reflexive-transitive closure is computed here.
  static FinitePoset from_covers(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
    std::size_t n = labels.size();
    std::vector<ElemSet> rel(n, ElemSet(n));
    for (std::size_t i = 0; i < n; ++i) rel[i].set(i);
    for (auto& [lo, hi] : covers) {
      if (lo >= n || hi >= n) throw precondition_violation("from_covers: id out of range");
      rel[lo].set(hi);
    }
    // Warshall closure on bitset rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (rel[i].test(k)) rel[i] |= rel[k];
    return from_leq(std::move(labels), rel);
  }

  std::size_t size() const { return up_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(std::size_t i, std::size_t j) const {
    check_id(i);
    check_id(j);
    return up_[i].test(j);
  }

  // Row views: everything above / below one element (inclusive).
  const ElemSet& up_row(std::size_t i) const { check_id(i); return up_[i]; }
  const ElemSet& down_row(std::size_t i) const { check_id(i); return down_[i]; }

  ElemSet empty_set() const { return ElemSet(size()); }
  ElemSet full_set() const { ElemSet s(size()); s.set(); return s; }

  void check_set(const ElemSet& s) const {
    if (s.size() != size()) throw precondition_violation("element set has wrong universe size");
  }

 private:
  void check_id(std::size_t i) const {
    if (i >= size()) throw precondition_violation("element id out of range");
  }

  void validate() const {
    std::size_t n = up_.size();
    if (labels_.size() != n) throw precondition_violation("labels/table size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      if (up_[i].size() != n) throw precondition_violation("order table is not square");
      if (!up_[i].test(i)) throw precondition_violation("order not reflexive");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && up_[i].test(j) && up_[j].test(i))
          throw precondition_violation("order not antisymmetric");
        if (up_[i].test(j) && !up_[j].is_subset_of(up_[i]))
          throw precondition_violation("order not transitive");
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (labels_[i] == labels_[j]) throw precondition_violation("duplicate element label");
  }

  void fill_down() {
    std::size_t n = up_.size();
    down_.assign(n, ElemSet(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (up_[i].test(j)) down_[j].set(i);
  }

  std::vector<std::string> labels_;
  std::vector<ElemSet> up_;    // up_[i][j] iff i <= j
  std::vector<ElemSet> down_;  // down_[i][j] iff j <= i
};

// Carrier wrappers; the names record which closure property holds.
struct DownSet {
  ElemSet carrier;
};
struct UpSet {
  ElemSet carrier;
};

inline bool is_down_set(const FinitePoset& p, const ElemSet& s) {
  p.check_set(s);
  for (std::size_t i = s.find_first(); i != ElemSet::npos; i = s.find_next(i))
    if (!p.down_row(i).is_subset_of(s)) return false;
  return true;
}

inline bool is_upper_set(const FinitePoset& p, const ElemSet& s) {
  p.check_set(s);
  for (std::size_t i = s.find_first(); i != ElemSet::npos; i = s.find_next(i))
    if (!p.up_row(i).is_subset_of(s)) return false;
  return true;
}

// Smallest down-set containing s.
inline DownSet down_closure(const FinitePoset& p, const ElemSet& s) {
  p.check_set(s);
  ElemSet out(p.size());
  for (std::size_t i = s.find_first(); i != ElemSet::npos; i = s.find_next(i))
    out |= p.down_row(i);
  return DownSet{out};
}

inline UpSet up_closure(const FinitePoset& p, const ElemSet& s) {
  p.check_set(s);
  ElemSet out(p.size());
  for (std::size_t i = s.find_first(); i != ElemSet::npos; i = s.find_next(i))
    out |= p.up_row(i);
  return UpSet{out};
}

inline ElemSet maximal_elements(const FinitePoset& p, const ElemSet& s) {
  p.check_set(s);
  ElemSet out = s;
  for (std::size_t i = s.find_first(); i != ElemSet::npos; i = s.find_next(i))
    for (std::size_t j = s.find_first(); j != ElemSet::npos; j = s.find_next(j))
      if (i != j && p.leq(i, j)) {
        out.reset(i);
        break;
      }
  return out;
}

inline bool set_is_directed(const FinitePoset& p, const ElemSet& d) {
  if (d.none()) return false;
  for (std::size_t i = d.find_first(); i != ElemSet::npos; i = d.find_next(i))
    for (std::size_t j = d.find_first(); j != ElemSet::npos; j = d.find_next(j)) {
      ElemSet ub = p.up_row(i) & p.up_row(j) & d;
      if (ub.none()) return false;
    }
  return true;
}

// Least upper bound of a subset when it exists.
inline std::optional<std::size_t> supremum(const FinitePoset& p, const ElemSet& s) {
  p.check_set(s);
  ElemSet ub = p.full_set();
  for (std::size_t i = s.find_first(); i != ElemSet::npos; i = s.find_next(i)) ub &= p.up_row(i);
  for (std::size_t b = ub.find_first(); b != ElemSet::npos; b = ub.find_next(b)) {
    bool least = true;
    for (std::size_t c = ub.find_first(); c != ElemSet::npos; c = ub.find_next(c))
      if (!p.leq(b, c)) {
        least = false;
        break;
      }
    if (least) return b;
  }
  return std::nullopt;
}

// Every nonempty finite directed set has a maximum; exposed for tests.
inline std::optional<std::size_t> directed_maximum(const FinitePoset& p, const ElemSet& d) {
  for (std::size_t i = d.find_first(); i != ElemSet::npos; i = d.find_next(i)) {
    bool top = true;
    for (std::size_t j = d.find_first(); j != ElemSet::npos; j = d.find_next(j))
      if (!p.leq(j, i)) {
        top = false;
        break;
      }
    if (top) return i;
  }
  return std::nullopt;
}

namespace detail {

// Visit nonempty directed subsets: all of them for small carriers, a
// deterministic random sample otherwise.
template <class Fn>
void for_each_directed_subset(const FinitePoset& p, std::size_t exhaustive_limit, Fn&& fn) {
  std::size_t n = p.size();
  if (n <= exhaustive_limit) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      ElemSet d(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t(1) << i)) d.set(i);
      if (set_is_directed(p, d)) fn(d);
    }
    return;
  }
  std::mt19937_64 rng(0x5c077u ^ (std::uint64_t(n) << 20));
  for (int trial = 0; trial < 4000; ++trial) {
    ElemSet d(n);
    std::size_t picks = 1 + rng() % 6;
    for (std::size_t t = 0; t < picks; ++t) d.set(rng() % n);
    // Grow toward directedness: close under chosen pairwise bounds.
    for (int round = 0; round < 4 && !set_is_directed(p, d); ++round) {
      ElemSet grown = d;
      for (std::size_t i = d.find_first(); i != ElemSet::npos; i = d.find_next(i))
        for (std::size_t j = d.find_next(i); j != ElemSet::npos; j = d.find_next(j)) {
          ElemSet ub = p.up_row(i) & p.up_row(j);
          if (ub.any()) grown.set(ub.find_first());
        }
      d = grown;
    }
    if (set_is_directed(p, d)) fn(d);
  }
}

}  // namespace detail

// True iff u is Scott-open. On a finite carrier that means: u is an upper
// set. The directed-set criterion is still evaluated (exhaustively up to the
// limit, sampled beyond) and cross-checked against the structural answer.
inline bool is_scott_open(const FinitePoset& p, const ElemSet& u, std::size_t exhaustive_limit = 12) {
  p.check_set(u);
  bool upper = is_upper_set(p, u);
  bool directed_ok = true;
  detail::for_each_directed_subset(p, exhaustive_limit, [&](const ElemSet& d) {
    auto m = directed_maximum(p, d);
    if (!m) throw std::logic_error("finite directed set without maximum");
    if (u.test(*m) && !(d & u).any()) directed_ok = false;
  });
  if (upper && !directed_ok) throw std::logic_error("upper set failed the directed-set criterion");
  return upper && directed_ok;
}

// All down-sets (= Scott-closed sets) of a small poset.
inline std::vector<ElemSet> all_down_sets(const FinitePoset& p) {
  std::size_t n = p.size();
  if (n > 22) throw precondition_violation("all_down_sets: carrier too large to enumerate");
  std::vector<ElemSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    ElemSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i)) s.set(i);
    if (is_down_set(p, s)) out.push_back(s);
  }
  return out;
}

inline std::vector<ElemSet> all_upper_sets(const FinitePoset& p) {
  std::vector<ElemSet> out;
  for (ElemSet s : all_down_sets(p)) out.push_back(~s);
  return out;
}

// C irreducible: nonempty, closed, and C ⊆ A ∪ B with A, B closed forces
// C ⊆ A or C ⊆ B.
inline bool is_irreducible_closed(const FinitePoset& p, const ElemSet& c,
                                  const std::vector<ElemSet>& closed_sets) {
  if (c.none() || !is_down_set(p, c)) return false;
  for (const ElemSet& a : closed_sets) {
    if (c.is_subset_of(a)) continue;
    for (const ElemSet& b : closed_sets) {
      if (c.is_subset_of(b)) continue;
      if (c.is_subset_of(a | b)) return false;
    }
  }
  return true;
}

inline std::vector<DownSet> irreducible_closed_sets(const FinitePoset& p) {
  auto closed = all_down_sets(p);
  std::vector<DownSet> out;
  for (const ElemSet& c : closed)
    if (is_irreducible_closed(p, c, closed)) out.push_back(DownSet{c});
  return out;
}

// Principal ideals, the expected answer for the irreducibility enumeration.
inline std::vector<DownSet> point_closures(const FinitePoset& p) {
  std::vector<DownSet> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(DownSet{p.down_row(i)});
  // Distinct by antisymmetry, but dedupe defensively.
  std::sort(out.begin(), out.end(),
            [](const DownSet& a, const DownSet& b) { return a.carrier < b.carrier; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const DownSet& a, const DownSet& b) { return a.carrier == b.carrier; }),
            out.end());
  return out;
}

// Sober: every irreducible closed set is the closure of exactly one point.
inline bool is_sober(const FinitePoset& p) {
  auto irr = irreducible_closed_sets(p);
  for (const DownSet& c : irr) {
    std::size_t generic_points = 0;
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p.down_row(x) == c.carrier) ++generic_points;
    if (generic_points != 1) return false;
  }
  return true;
}

// Compactness of a subset, validated the pedestrian way: the canonical open
// cover {↑x : x ∈ k} always admits the finite subcover consisting of itself.
inline bool is_compact_subset(const FinitePoset& p, const ElemSet& k) {
  p.check_set(k);
  ElemSet covered(p.size());
  for (std::size_t i = k.find_first(); i != ElemSet::npos; i = k.find_next(i))
    covered |= p.up_row(i);
  return k.is_subset_of(covered);
}

// Coherent: intersections of compact saturated sets are compact. Saturated
// sets of an Alexandrov space are exactly the upper sets.
inline bool is_coherent(const FinitePoset& p) {
  auto uppers = all_upper_sets(p);
  for (const ElemSet& a : uppers) {
    if (!is_compact_subset(p, a)) return false;
    for (const ElemSet& b : uppers) {
      ElemSet meet = a & b;
      if (!is_upper_set(p, meet) || !is_compact_subset(p, meet)) return false;
    }
  }
  return true;
}

// Well-filtered, checked on filtered families up to the given chain length:
// if the intersection of a ⊇-directed family of compact saturated sets lands
// inside an open set, some member already does.
inline bool is_well_filtered(const FinitePoset& p, std::size_t max_chain = 2) {
  auto uppers = all_upper_sets(p);
  auto check_family = [&](const std::vector<ElemSet>& family) {
    ElemSet inter = p.full_set();
    for (const ElemSet& k : family) inter &= k;
    for (const ElemSet& u : uppers) {  // opens = upper sets
      if (!inter.is_subset_of(u)) continue;
      bool some_member_inside = false;
      for (const ElemSet& k : family)
        if (k.is_subset_of(u)) {
          some_member_inside = true;
          break;
        }
      if (!some_member_inside) return false;
    }
    return true;
  };
  for (const ElemSet& a : uppers) {
    if (!check_family({a})) return false;
    if (max_chain < 2) continue;
    for (const ElemSet& b : uppers)
      if (b.is_subset_of(a) && !check_family({a, b})) return false;
  }
  return true;
}

// ---- serialization ---------------------------------------------------------
// Header `poset <n>`, then one line per element:
//   <id> <label> : <ids of the elements directly above (upper covers)>
// The transitive closure is recomputed on load; saving emits the transitive
// reduction.

inline std::string poset_save(const FinitePoset& p) {
  std::size_t n = p.size();
  std::ostringstream out;
  out << "poset " << n << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << i << " " << p.labels()[i] << " :";
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq(i, j)) continue;
      bool cover = true;  // nothing strictly between i and j
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j && p.leq(i, k) && p.leq(k, j)) {
          cover = false;
          break;
        }
      if (cover) out << " " << j;
    }
    out << "\n";
  }
  return out.str();
}

inline FinitePoset poset_load(std::istream& in) {
  std::string word;
  std::size_t n = 0;
  if (!(in >> word) || word != "poset" || !(in >> n))
    throw precondition_violation("poset_load: missing `poset <n>` header");
  std::vector<std::string> labels(n);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::string line;
  std::getline(in, line);  // rest of header line
  for (std::size_t row = 0; row < n; ++row) {
    if (!std::getline(in, line)) throw precondition_violation("poset_load: truncated file");
    std::istringstream ls(line);
    std::size_t id;
    std::string label, colon;
    if (!(ls >> id >> label >> colon) || colon != ":" || id >= n)
      throw precondition_violation("poset_load: malformed element line");
    labels[id] = label;
    std::size_t above;
    while (ls >> above) covers.emplace_back(id, above);
  }
  return FinitePoset::from_covers(std::move(labels), covers);
}

inline FinitePoset poset_load_string(const std::string& text) {
  std::istringstream in(text);
  return poset_load(in);
}

// ---- labeled poset enumeration ---------------------------------------------
// Every partial order on elements 0..n-1, generated by assigning each
// unordered pair one of {incomparable, <, >} and keeping transitive results.

inline std::vector<FinitePoset> all_labeled_posets(std::size_t n) {
  if (n > 5) throw precondition_violation("all_labeled_posets: n too large");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<FinitePoset> out;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::size_t combos = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<ElemSet> rel(n, ElemSet(n));
    for (std::size_t i = 0; i < n; ++i) rel[i].set(i);
    std::size_t c = code;
    for (auto& [i, j] : pairs) {
      switch (c % 3) {
        case 1: rel[i].set(j); break;
        case 2: rel[j].set(i); break;
        default: break;
      }
      c /= 3;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j) {
        if (!rel[i].test(j)) continue;
        if (!rel[j].is_subset_of(rel[i])) transitive = false;
      }
    if (!transitive) continue;
    out.push_back(FinitePoset::from_leq(labels, rel));
  }
  return out;
}

// ---- decidable-order interface ---------------------------------------------

template <class T>
struct OrderOracle {
  std::string name;
  std::function<bool(const T&, const T&)> leq;
};

// Partial-order axioms on a finite sample; returns a description of the
// first violation found.
template <class T>
std::optional<std::string> order_axiom_violation(const OrderOracle<T>& o,
                                                 const std::vector<T>& sample) {
  std::size_t n = sample.size();
  std::vector<std::vector<char>> le(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) le[i][j] = o.leq(sample[i], sample[j]);
  for (std::size_t i = 0; i < n; ++i) {
    if (!le[i][i]) return "not reflexive at sample " + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le[i][j] && le[j][i])
        return "antisymmetry violated at samples " + std::to_string(i) + "," + std::to_string(j);
      if (!le[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (le[j][k] && !le[i][k])
          return "transitivity violated at samples " + std::to_string(i) + "," +
                 std::to_string(j) + "," + std::to_string(k);
    }
  }
  return std::nullopt;
}

}  // namespace scottkit
