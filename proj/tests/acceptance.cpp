// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion restates an external guarantee of the toolkit and checks it
// end to end, reusing the scenario machinery where a scenario is the
// guarantee and driving the library directly where the criterion is finer.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "scottkit/scenarios.hpp"

using namespace scottkit;

namespace {

int failures = 0;

void line(const std::string& id, bool ok, const std::string& what) {
  std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  "
            << what << "\n";
  if (!ok) ++failures;
}

bool scenario_ok(const std::string& name, double* elapsed = nullptr) {
  ScenarioParams ps;
  auto r = run_scenario(name, ps);
  if (!r) return false;
  if (elapsed) *elapsed = r->elapsed_seconds;
  return r->ok();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2fs", s);
  return buf;
}

}  // namespace

// Order axioms of the column poset, exhaustive on the largest window.
static void criterion_1() {
  double elapsed = 0.0;
  bool ok = scenario_ok("order-axioms-P", &elapsed);
  ok &= elapsed < 60.0;
  line("1", ok, "column poset order axioms, exhaustive window sweep (" +
                    fmt_seconds(elapsed) + ", budget 60s)");
}

// Encoding invariants at the criterion's own parameter ranges.
static void criterion_2() {
  bool inj = true, mono = true;
  std::vector<Seq> seqs = sequences_up_to_weight(10);
  std::set<Nat> ranks;
  for (const Seq& s : seqs) ranks.insert(mono_inj(s));
  inj &= ranks.size() == seqs.size();
  for (const Seq& s : seqs)
    for (const Seq& t : seqs)
      if (s.size() < t.size() && is_prefix(s, t)) mono &= mono_inj(s) < mono_inj(t);

  // reservoirs with small codes: pairwise disjoint, every member clears the
  // upper column they serve
  bool disjoint = true, lower_bound = true;
  std::vector<std::pair<Nat, Nat>> pairs;
  for (Nat n = 2; n <= 8; ++n)
    for (Nat m = 1; m < n; ++m)
      if (pair_code(m, n) <= 20) pairs.push_back({m, n});
  std::vector<std::vector<bool>> hit;
  for (const auto& [m, n] : pairs) {
    std::vector<bool> members(10001, false);
    for (Nat x = 1; x <= 10000; ++x)
      if (i_set_contains(m, n, x)) {
        members[x.convert_to<std::size_t>()] = true;
        lower_bound &= x > n;
      }
    hit.push_back(std::move(members));
  }
  for (std::size_t a = 0; a < hit.size(); ++a)
    for (std::size_t b = a + 1; b < hit.size(); ++b)
      for (std::size_t x = 1; x <= 10000; ++x)
        if (hit[a][x] && hit[b][x]) disjoint = false;

  bool round_trip = true;
  std::vector<Seq> small = sequences_up_to_weight(6);
  for (const auto& [m, n] : pairs) {
    if (pair_code(m, n) > 6) continue;
    for (const Seq& s : small) {
      auto img = f_decode(f_apply(m, n, s));
      round_trip &= img && img->m == m && img->n == n && img->s == s;
    }
  }

  bool ok = inj && mono && disjoint && lower_bound && round_trip &&
            scenario_ok("gadget-encodings");
  line("2", ok, "sequence numbering injective and prefix-monotone to weight 10, " +
                    std::to_string(pairs.size()) +
                    " reservoirs disjoint on [1,10000], decode round trips");
}

// Meets of classified principal ideals against raw down-set intersection,
// plus the licensed tables rendered cell for cell.
static void criterion_3() {
  Truncation tr = truncation(24, 6);
  std::vector<MElem> classified;
  for (const PElem& x : tr.elems) classified.push_back(classify_principal(x));

  Rng rng(kDefaultSeed);
  bool meets_ok = true;
  for (int trial = 0; trial < 10000 && meets_ok; ++trial) {
    std::size_t i = rng.below(tr.elems.size());
    std::size_t j = rng.below(tr.elems.size());
    MElem z = intersect(classified[i], classified[j]);
    ElemSet expect = tr.poset.down_row(i) & tr.poset.down_row(j);
    for (std::size_t k = 0; k < tr.elems.size(); ++k)
      if (member(z, tr.elems[k]) != expect.test(k)) {
        meets_ok = false;
        break;
      }
  }

  const std::vector<std::string> expect_primary{
      "meet\tI\tII\tIII\tIV\tV",
      "I\tI/∅\t∅\tI/∅\tI/∅\tI/∅",
      "II\t\tII/∅\tII/∅\tII/∅\tII/∅",
      "III\t\t\tIII/∅\tI/II/∅\tI/II/∅",
      "IV\t\t\t\tI/II/IV/I∪II¹/∅\tI/II/I∪II¹/I∪II²/∅",
      "V\t\t\t\t\tI/II/V/I∪II²/∅",
  };
  const std::vector<std::string> expect_extension{
      "meet\tI\tII\tIII\tIV\tV\tI∪II¹\tI∪II²",
      "I∪II¹\tI/∅\tII/∅\tI/II/∅\tI/II/I∪II¹/∅\tI/II/I∪II¹/∅\tI/II/I∪II¹/∅"
      "\tI/II/I∪II¹/∅",
      "I∪II²\tI/∅\tII/∅\tI/II/∅\tI/II/I∪II¹/∅\tI/II/I∪II²/∅\t\tI/II/I∪II²/∅",
  };
  bool cells_ok = table_lines(licensed_primary_table(), false) == expect_primary &&
                  table_lines(licensed_extension_table(), false) == expect_extension;
  bool audit_ok = true;
  for (const MeetTable& t : {licensed_primary_table(), licensed_extension_table()})
    for (const CellAudit& a : audit_table(t)) audit_ok &= a.ok;

  bool ok = meets_ok && cells_ok && audit_ok && scenario_ok("intersection-table-oracle");
  line("3", ok, "10000 classified meets equal raw down-set intersections on 888 "
                "points, licensed tables rendered cell for cell");
}

// Directed suprema of bounded union chains: the image-column top, least among
// canonical upper bounds.
static void criterion_4() {
  Rng rng(kDefaultSeed);
  std::vector<MElem> candidates = enumerate_canonical(6);
  bool sup_ok = true, bound_ok = true, least_ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    Nat m(rng.between(1, 5));
    Nat n(rng.between(m.convert_to<std::uint64_t>() + 1, 6));
    Seq s;
    std::size_t len = rng.between(2, 3);
    for (std::size_t i = 0; i < len; ++i) s.push_back(Nat(rng.between(1, 3)));
    std::vector<MElem> links;
    std::uint64_t steps = rng.between(3, 8);
    for (std::uint64_t k = 1; k <= steps; ++k)
      links.push_back(melem_i_ii_2(m, n, s, Nat(k)));

    MElem sup = directed_sup(links);
    MElem expected = classify_principal(PElem{f_apply(m, n, s), LElem{LTop{}}});
    sup_ok &= sup == expected;
    for (const MElem& link : links) bound_ok &= subset(link, sup);

    // any canonical bound must swallow arbitrarily deep links; probe one far
    // beyond every parameter in the candidate space
    MElem probe = melem_i_ii_2(m, n, s, Nat(64));
    for (const MElem& cand : candidates) {
      if (cand == sup || !subset(cand, sup)) continue;
      bool bounds_all = subset(probe, cand);
      for (std::size_t k = 0; bounds_all && k < links.size(); ++k)
        bounds_all = subset(links[k], cand);
      if (bounds_all) least_ok = false;
    }
  }
  bool ok = sup_ok && bound_ok && least_ok && scenario_ok("directed-sups-M");
  line("4", ok, "1000 union chains idealize to the image-column top, least "
                "among 1150 canonical candidates");
}

// The non-sobriety evidence chain: no global bound, irreducibility witnesses,
// and a continuous classification map.
static void criterion_5() {
  NoUpperBoundRecord rec = no_upper_bound_witness(12);
  bool no_bound_ok = rec.ok;

  bool irreducible_ok = scenario_ok("irreducibility-P");

  Truncation tr = truncation(24, 6);
  std::vector<MElem> classified;
  for (const PElem& x : tr.elems) classified.push_back(classify_principal(x));
  bool monotone_ok = true;
  for (std::size_t j = 0; j < tr.elems.size(); ++j) {
    const ElemSet& below = tr.poset.down_row(j);
    for (std::size_t i = below.find_first(); i != ElemSet::npos;
         i = below.find_next(i))
      monotone_ok &= subset(classified[i], classified[j]);
  }
  bool chains_ok = scenario_ok("adjunction-RF");

  bool ok = no_bound_ok && irreducible_ok && monotone_ok && chains_ok;
  line("5", ok, "no canonical upper bound over " + rec.checked.str() +
                    " candidates, 200 witness walks verified, classification "
                    "monotone on all 888 window points and sup-preserving");
}

// The retraction pair and distributivity of the down-set lattice.
static void criterion_6() {
  Rng rng(kDefaultSeed);
  std::vector<RElem> relems{top_r()};
  for (const MElem& e : enumerate_canonical(6)) relems.push_back(RElem{e});
  bool identity_ok = true;
  for (int trial = 0; trial < 500; ++trial) {
    const RElem& x = rng.pick(relems);
    identity_ok &= g_map_F(f_map_R(x)) == x;
  }
  bool ok = identity_ok && scenario_ok("adjunction-RF") &&
            scenario_ok("distributivity-F");
  line("6", ok, "composite fixes 500 sampled points, adjunction biconditional "
                "on 500 pairs, both distributive laws on 1000 triples");
}

// The staged product run on the double successor-chain window.
static void criterion_7() {
  bool ok = scenario_ok("product-omega");
  line("7", ok, "staged run reproduces the reference trace, picks verified "
                "open, non-open corner rejected at stage 2");
}

// The grid dcpo: axioms at depth 6, the compact-filter intersection shape,
// and the declared ideal stream.
static void criterion_8() {
  JiaTruncation t = jia_truncation(6, 6, 6);
  bool axioms_ok = t.elems.size() == 252;
  for (std::size_t i = 0; axioms_ok && i < t.elems.size(); ++i) {
    axioms_ok &= jia_leq(t.elems[i], t.elems[i]);
    for (std::size_t j = 0; axioms_ok && j < t.elems.size(); ++j) {
      if (i != j && jia_leq(t.elems[i], t.elems[j]) &&
          jia_leq(t.elems[j], t.elems[i]))
        axioms_ok = false;
      if (!jia_leq(t.elems[i], t.elems[j])) continue;
      for (std::size_t k = 0; k < t.elems.size(); ++k)
        if (jia_leq(t.elems[j], t.elems[k]) &&
            !jia_leq(t.elems[i], t.elems[k]))
          axioms_ok = false;
    }
  }
  bool ok = axioms_ok && scenario_ok("jia-example");
  line("8", ok, "grid order axioms exhaustive on 252 points, filter "
                "intersection and shrinking family as documented");
}

// Every small finite poset is sober, coherent, and well-filtered.
static void criterion_9() {
  bool ok = scenario_ok("finite-sober");
  line("9", ok, "all labeled posets on up to 5 points sober, coherent, "
                "well-filtered");
}

// The command-line reports are reproducible and fast.
static void criterion_10() {
  const char* bin = std::getenv("SCOTTKIT_BIN");
  if (!bin) {
    line("10", false, "SCOTTKIT_BIN not set, cannot drive the binary");
    return;
  }
  auto capture = [&](std::string* out) {
    std::string cmd = std::string(bin) + " verify --all --seed 7 --json 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
      out->append(buf.data(), got);
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  auto strip_elapsed = [](const std::string& text) {
    std::string out, line_buf;
    for (char c : text) {
      if (c != '\n') {
        line_buf += c;
        continue;
      }
      if (line_buf.find("\"elapsed\"") == std::string::npos) out += line_buf + "\n";
      line_buf.clear();
    }
    return out;
  };
  StopWatch sw;
  std::string first, second;
  int e1 = capture(&first);
  int e2 = capture(&second);
  double took = sw.seconds();
  bool ok = e1 == 0 && e2 == 0 &&
            strip_elapsed(first) == strip_elapsed(second) && took < 300.0;
  line("10", ok, "two seeded runs byte-identical outside timing (" +
                     fmt_seconds(took) + " for both, budget 300s)");
}

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << "acceptance: " << (10 - failures) << "/10 criteria pass\n";
  return failures == 0 ? 0 : 1;
}
