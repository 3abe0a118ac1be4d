#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scottkit/intersect.hpp"
#include "scottkit/melem.hpp"

namespace scottkit {

// Display names for the meet tables. The union forms and the empty set keep
// their typeset spelling; the parse grammar in melem.hpp stays ASCII.
inline const char* display_tag(MTag t) {
  switch (t) {
    case MTag::empty: return "∅";
    case MTag::type_i: return "I";
    case MTag::type_ii: return "II";
    case MTag::type_iii: return "III";
    case MTag::type_iv: return "IV";
    case MTag::type_v: return "V";
    case MTag::type_i_ii_1: return "I∪II¹";
    case MTag::type_i_ii_2: return "I∪II²";
  }
  return "?";
}

// canonical cell order: the five base forms, the two unions, then ∅
inline const std::vector<std::string>& tag_display_order() {
  static const std::vector<std::string> order{"I",      "II",     "III",
                                              "IV",     "V",      "I∪II¹",
                                              "I∪II²",  "∅"};
  return order;
}

inline std::vector<std::string> sort_tags(std::set<std::string> tags) {
  std::vector<std::string> out;
  for (const std::string& t : tag_display_order())
    if (tags.count(t)) out.push_back(t);
  return out;
}

struct MeetTable {
  std::string name;
  std::vector<std::string> row_tags;
  std::vector<std::string> col_tags;
  // cells[r][c] lists the result forms this cell may produce, in canonical
  // order; an empty list marks a blank cell (redundant by symmetry)
  std::vector<std::vector<std::vector<std::string>>> cells;
};

// The two fixture tables: which canonical forms a meet of each pair of forms
// may take. Frozen data, the ground truth the computed meets answer to.
inline MeetTable licensed_primary_table() {
  MeetTable t;
  t.name = "primary";
  t.row_tags = {"I", "II", "III", "IV", "V"};
  t.col_tags = t.row_tags;
  std::vector<std::vector<std::string>> blank_row(5);
  t.cells.assign(5, blank_row);
  auto set = [&](int r, int c, std::vector<std::string> v) {
    t.cells[r][c] = std::move(v);
  };
  set(0, 0, {"I", "∅"});
  set(0, 1, {"∅"});
  set(0, 2, {"I", "∅"});
  set(0, 3, {"I", "∅"});
  set(0, 4, {"I", "∅"});
  set(1, 1, {"II", "∅"});
  set(1, 2, {"II", "∅"});
  set(1, 3, {"II", "∅"});
  set(1, 4, {"II", "∅"});
  set(2, 2, {"III", "∅"});
  set(2, 3, {"I", "II", "∅"});
  set(2, 4, {"I", "II", "∅"});
  set(3, 3, {"I", "II", "IV", "I∪II¹", "∅"});
  set(3, 4, {"I", "II", "I∪II¹", "I∪II²", "∅"});
  set(4, 4, {"I", "II", "V", "I∪II²", "∅"});
  return t;
}

inline MeetTable licensed_extension_table() {
  MeetTable t;
  t.name = "extension";
  t.row_tags = {"I∪II¹", "I∪II²"};
  t.col_tags = {"I", "II", "III", "IV", "V", "I∪II¹", "I∪II²"};
  std::vector<std::vector<std::string>> blank_row(7);
  t.cells.assign(2, blank_row);
  t.cells[0][0] = {"I", "∅"};
  t.cells[0][1] = {"II", "∅"};
  t.cells[0][2] = {"I", "II", "∅"};
  t.cells[0][3] = {"I", "II", "I∪II¹", "∅"};
  t.cells[0][4] = {"I", "II", "I∪II¹", "∅"};
  t.cells[0][5] = {"I", "II", "I∪II¹", "∅"};
  t.cells[0][6] = {"I", "II", "I∪II¹", "∅"};
  t.cells[1][0] = {"I", "∅"};
  t.cells[1][1] = {"II", "∅"};
  t.cells[1][2] = {"I", "II", "∅"};
  t.cells[1][3] = {"I", "II", "I∪II¹", "∅"};
  t.cells[1][4] = {"I", "II", "I∪II²", "∅"};
  // cells[1][5] stays blank: symmetric to row I∪II¹ column I∪II²
  t.cells[1][6] = {"I", "II", "I∪II²", "∅"};
  return t;
}

// Cells whose licensed II entry cannot actually occur: a meet lands on a bare
// numeral form only when a numeral piece survives with no sequence piece,
// which needs a free full or numeral column on one side. The forms in these
// nine cells pin every numeral column to an image column that also carries
// the sequence side, so the II outcome is unreachable.
inline const std::set<std::pair<std::string, std::string>>& unreachable_entries() {
  static const std::set<std::pair<std::string, std::string>> dead{
      {"III", "V"},    {"V", "V"},          {"I∪II¹", "III"},
      {"I∪II¹", "V"},  {"I∪II¹", "I∪II¹"},  {"I∪II¹", "I∪II²"},
      {"I∪II²", "III"}, {"I∪II²", "V"},     {"I∪II²", "I∪II²"},
  };
  return dead;
}

inline std::set<std::string> dead_tags(const std::string& row, const std::string& col) {
  if (unreachable_entries().count({row, col})) return {"II"};
  return {};
}

// Documented results outside the licensed lists. Two effects produce them:
//   - boundary relabel: when the meet keeps a length-one sequence prefix and
//     the natural bound stays at or below its head entry, the surviving union
//     set satisfies the I∪II¹ side condition, so the canonical labeler names
//     it I∪II¹ where the licensed list spells the outcome I∪II².
//   - single-entry absorption: a single-entry I∪II² form with bound above the
//     head entry sits inside the image-column principal form over the same
//     parameters, so the meet returns the union form whole.
struct ExtensionEntry {
  std::string tag;
  std::string reason;
};

inline const std::map<std::pair<std::string, std::string>, ExtensionEntry>&
extension_entries() {
  static const std::map<std::pair<std::string, std::string>, ExtensionEntry> m{
      {{"V", "V"}, {"I∪II¹", "boundary relabel"}},
      {{"I∪II²", "V"}, {"I∪II¹", "boundary relabel"}},
      {{"I∪II²", "IV"}, {"I∪II²", "single-entry absorption"}},
  };
  return m;
}

inline std::set<std::string> extra_tags(const std::string& row, const std::string& col) {
  auto it = extension_entries().find({row, col});
  if (it == extension_entries().end()) return {};
  return {it->second.tag};
}

// Hand-picked members of each form, chosen so that across all pairs every
// reachable cell entry is produced at least once (audited by audit_table):
// free columns, image columns, shared columns, nested and crossing sequences.
inline const std::map<std::string, std::vector<MElem>>& representative_pool() {
  static const std::map<std::string, std::vector<MElem>> pool = [] {
    std::map<std::string, std::vector<MElem>> p;
    p["I"] = {melem_i(1, {1}), melem_i(1, {1, 1}), melem_i(2, {3}),
              melem_i(14, {1, 1}), melem_i(6, {1})};
    p["II"] = {melem_ii(2, 1), melem_ii(5, 3), melem_ii(6, 1), melem_ii(14, 2)};
    p["III"] = {melem_iii(1), melem_iii(2), melem_iii(5)};
    p["IV"] = {melem_iv(1, 2, {1}),  melem_iv(1, 3, {1}), melem_iv(2, 3, {1}),
               melem_iv(3, 4, {1}),  melem_iv(1, 6, {1}), melem_iv(2, 6, {1}),
               melem_iv(1, 14, {1}), melem_iv(3, 14, {5})};
    p["V"] = {melem_v(1, 2, {1, 1}),    melem_v(1, 2, {1, 2}),
              melem_v(1, 2, {1, 3}),    melem_v(1, 2, {1, 2, 1}),
              melem_v(1, 2, {1, 1, 1}), melem_v(1, 3, {1, 1}),
              melem_v(6, 7, {1, 1}),    melem_v(14, 15, {1, 1})};
    p["I∪II¹"] = {melem_i_ii_1(1, 6, {1}, 1), melem_i_ii_1(1, 4, {1}, 1),
                  melem_i_ii_1(2, 8, {1}, 1), melem_i_ii_1(1, 10, {2}, 2),
                  melem_i_ii_1(1, 14, {1}, 1)};
    p["I∪II²"] = {melem_i_ii_2(1, 2, {1, 1}, 2), melem_i_ii_2(1, 2, {1, 1}, 5),
                  melem_i_ii_2(1, 2, {1, 2}, 1), melem_i_ii_2(1, 3, {1, 1}, 3),
                  melem_i_ii_2(2, 3, {1, 1}, 1)};
    return p;
  }();
  return pool;
}

// every meet of the two pools, as display tags in canonical order
inline std::vector<std::string> observed_cell(const std::string& row_tag,
                                              const std::string& col_tag) {
  const auto& pool = representative_pool();
  std::set<std::string> seen;
  for (const MElem& a : pool.at(row_tag))
    for (const MElem& b : pool.at(col_tag))
      seen.insert(display_tag(intersect(a, b).tag));
  return sort_tags(std::move(seen));
}

struct CellAudit {
  std::string row, col;
  std::vector<std::string> licensed;
  std::vector<std::string> observed;
  std::vector<std::string> dead;    // licensed entries documented unreachable
  std::vector<std::string> extras;  // documented results beyond the license
  // every live licensed tag observed, nothing beyond licensed plus extras
  bool ok = false;
};

inline std::vector<CellAudit> audit_table(const MeetTable& t) {
  std::vector<CellAudit> out;
  for (std::size_t r = 0; r < t.row_tags.size(); ++r)
    for (std::size_t c = 0; c < t.col_tags.size(); ++c) {
      if (t.cells[r][c].empty()) continue;
      CellAudit a;
      a.row = t.row_tags[r];
      a.col = t.col_tags[c];
      a.licensed = t.cells[r][c];
      a.observed = observed_cell(a.row, a.col);
      std::set<std::string> dead = dead_tags(a.row, a.col);
      for (const std::string& d : dead) a.dead.push_back(d);
      std::set<std::string> extras = extra_tags(a.row, a.col);
      for (const std::string& e : extras) a.extras.push_back(e);
      std::set<std::string> expect(a.licensed.begin(), a.licensed.end());
      for (const std::string& d : dead) expect.erase(d);
      std::set<std::string> allowed = expect;
      allowed.insert(extras.begin(), extras.end());
      std::set<std::string> obs(a.observed.begin(), a.observed.end());
      a.ok = std::includes(obs.begin(), obs.end(), expect.begin(), expect.end()) &&
             std::includes(allowed.begin(), allowed.end(), obs.begin(), obs.end());
      out.push_back(std::move(a));
    }
  return out;
}

inline std::string join_tags(const std::vector<std::string>& tags) {
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i) out += "/";
    out += tags[i];
  }
  return out;
}

// tab-separated rendering; `computed` swaps the licensed cells for the tags
// actually produced by the representative pools
inline std::vector<std::string> table_lines(const MeetTable& t, bool computed) {
  std::vector<std::string> lines;
  std::string head = "meet";
  for (const std::string& c : t.col_tags) head += "\t" + c;
  lines.push_back(head);
  for (std::size_t r = 0; r < t.row_tags.size(); ++r) {
    std::string line = t.row_tags[r];
    for (std::size_t c = 0; c < t.col_tags.size(); ++c) {
      line += "\t";
      if (t.cells[r][c].empty()) continue;
      line += computed ? join_tags(observed_cell(t.row_tags[r], t.col_tags[c]))
                       : join_tags(t.cells[r][c]);
    }
    lines.push_back(line);
  }
  return lines;
}

}  // namespace scottkit
