#include <catch2/catch_amalgamated.hpp>

#include <scottkit/lattice_l.hpp>
#include <scottkit/mono_inj.hpp>
#include <scottkit/poset_p.hpp>

#include <vector>

using namespace scottkit;

namespace {

std::vector<LElem> fibre_universe() {
  std::vector<LElem> u;
  for (unsigned k = 1; k <= 5; ++k) u.push_back(Nat(k));
  for (const Seq& s : sequences_up_to_weight(6)) u.push_back(s);
  u.push_back(LTop{});
  return u;
}

std::vector<PElem> column_universe() {
  std::vector<PElem> u;
  std::vector<Nat> cols = {1, 2, 3, 4, 5, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 48, 64};
  std::vector<LElem> vals;
  for (unsigned k = 1; k <= 3; ++k) vals.push_back(Nat(k));
  for (const Seq& s : {Seq{1}, Seq{2}, Seq{1, 1}, Seq{1, 2}}) vals.push_back(s);
  vals.push_back(LTop{});
  for (const Nat& c : cols)
    for (const LElem& v : vals) u.push_back(PElem{c, v});
  return u;
}

}  // namespace

TEST_CASE("fibre order is a partial order with least upper bounds") {
  auto u = fibre_universe();
  for (const LElem& a : u) {
    REQUIRE(leq_L(a, a));
    REQUIRE(leq_L(a, LElem{LTop{}}));
    for (const LElem& b : u) {
      if (leq_L(a, b) && leq_L(b, a)) REQUIRE(a == b);
      for (const LElem& c : u)
        if (leq_L(a, b) && leq_L(b, c)) REQUIRE(leq_L(a, c));
      LElem j = lub_L(a, b);
      REQUIRE(leq_L(a, j));
      REQUIRE(leq_L(b, j));
      for (const LElem& c : u)
        if (leq_L(a, c) && leq_L(b, c)) REQUIRE(leq_L(j, c));
    }
  }
}

TEST_CASE("fibre text round trip") {
  for (const LElem& v : fibre_universe()) {
    auto back = lelem_parse(lelem_str(v));
    REQUIRE(back.has_value());
    REQUIRE(*back == v);
  }
  REQUIRE_FALSE(lelem_parse("n:0").has_value());
  REQUIRE_FALSE(lelem_parse("s:[]").has_value());
  REQUIRE_FALSE(lelem_parse("s:[1,0]").has_value());
  REQUIRE_FALSE(lelem_parse("bogus").has_value());
}

TEST_CASE("element text round trip") {
  for (const PElem& p : column_universe()) {
    auto back = pelem_parse(pelem_str(p));
    REQUIRE(back.has_value());
    REQUIRE(*back == p);
  }
  REQUIRE(pelem_str(PElem{3, Seq{1, 2}}) == "(3|s:[1,2])");
  REQUIRE_FALSE(pelem_parse("(0|top)").has_value());
  REQUIRE_FALSE(pelem_parse("(1|)").has_value());
}

TEST_CASE("cross-column anchors") {
  auto below = [](PElem x, PElem y) { return strictly_below(x, y); };

  // Column 6 decodes to (1, 2, [1]); 14 to (1, 2, [1,1]); 22 to (1, 2, [1,2]).
  auto w = below({1, Seq{1}}, {6, LTop{}});
  REQUIRE(w);
  REQUIRE(w->rule == StrictRule::rise);
  w = below({1, Seq{1}}, {14, LTop{}});
  REQUIRE(w);
  REQUIRE(w->rule == StrictRule::rise_extend);
  w = below({2, Nat(1)}, {6, LTop{}});
  REQUIRE(w);
  REQUIRE(w->rule == StrictRule::drop_single);
  w = below({6, Nat(1)}, {14, LTop{}});
  REQUIRE(w);
  REQUIRE(w->rule == StrictRule::drop_tail);
  w = below({6, Nat(1)}, {22, LTop{}});
  REQUIRE(w);
  REQUIRE(w->rule == StrictRule::drop_tail_extend);
  w = below({3, Nat(1)}, {4, LTop{}});  // 4 decodes to (1, 3, [1])
  REQUIRE(w);
  REQUIRE(w->rule == StrictRule::drop_single);

  REQUIRE_FALSE(below({2, Nat(3)}, {6, LTop{}}));   // 3 exceeds the tag [1]
  REQUIRE_FALSE(below({1, Nat(1)}, {4, LTop{}}));   // wrong source column for a nat
  REQUIRE_FALSE(below({1, Seq{2}}, {6, LTop{}}));   // [2] is not a prefix of [1]
  REQUIRE_FALSE(below({1, Seq{1}}, {6, Nat(9)}));   // target must be a column top
  REQUIRE_FALSE(below({1, Seq{1}}, {5, LTop{}}));   // 5 decodes to nothing
  REQUIRE_FALSE(below({1, LTop{}}, {6, LTop{}}));   // tops only relate within a column
}

TEST_CASE("column order is a strict partial order with replayable witnesses") {
  auto u = column_universe();
  const std::size_t n = u.size();
  std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
  std::vector<std::vector<StrictWitness>> wit(n, std::vector<StrictWitness>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto w = strictly_below(u[i], u[j]);
      if (w) {
        lt[i][j] = 1;
        wit[i][j] = *w;
      }
    }

  SECTION("irreflexive and asymmetric") {
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE_FALSE(lt[i][i]);
      for (std::size_t j = 0; j < n; ++j)
        if (lt[i][j]) REQUIRE_FALSE(lt[j][i]);
    }
  }

  SECTION("transitive") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!lt[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (lt[j][k]) REQUIRE(lt[i][k]);
      }
  }

  SECTION("witnesses replay, and replay rejects tampering") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!lt[i][j]) continue;
        REQUIRE(strict_witness_replay(wit[i][j], u[i], u[j]));
        REQUIRE_FALSE(strict_witness_replay(wit[i][j], u[j], u[i]));
        StrictWitness bad = wit[i][j];
        bad.t = seq_append(bad.t, 9);
        if (bad.rule != StrictRule::within_column)
          REQUIRE_FALSE(strict_witness_replay(bad, u[i], u[j]));
      }
  }

  SECTION("column tops are maximal") {
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_top(u[i].val)) continue;
      for (std::size_t j = 0; j < n; ++j) REQUIRE_FALSE(lt[i][j]);
    }
  }

  SECTION("reflexive closure") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        REQUIRE(leq_P(u[i], u[j]) == (u[i] == u[j] || lt[i][j]));
  }
}
