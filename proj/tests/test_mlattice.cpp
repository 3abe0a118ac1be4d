#include <scottkit/intersect.hpp>
#include <scottkit/melem.hpp>
#include <scottkit/truncation.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace scottkit;

namespace {

const Truncation& small_window() {
  static Truncation t = build_truncation(12, 4, 6);
  return t;
}

const Truncation& big_window() {
  static Truncation t = build_truncation(24, 6, 24);
  return t;
}

// Pool of canonical values whose maximal points all live inside the big
// window, so containment of denotations can be checked extensionally.
std::vector<MElem> canonical_pool() {
  std::vector<MElem> pool;
  pool.push_back(melem_empty());
  pool.push_back(melem_i(1, {1}));
  pool.push_back(melem_i(1, {1, 2}));
  pool.push_back(melem_i(4, {2, 2}));
  pool.push_back(melem_i(6, {1, 1}));
  pool.push_back(melem_ii(1, 3));
  pool.push_back(melem_ii(5, 3));
  pool.push_back(melem_ii(6, 1));
  pool.push_back(melem_ii(6, 24));
  pool.push_back(melem_iii(1));
  pool.push_back(melem_iii(2));
  pool.push_back(melem_iii(5));
  pool.push_back(melem_iv(1, 2, {1}));
  pool.push_back(melem_iv(1, 2, {2}));
  pool.push_back(melem_iv(1, 2, {3}));
  pool.push_back(melem_iv(1, 3, {1}));
  pool.push_back(melem_iv(2, 3, {1}));
  pool.push_back(melem_iv(2, 3, {2}));
  pool.push_back(melem_iv(1, 4, {1}));
  pool.push_back(melem_v(1, 2, {1, 1}));
  pool.push_back(melem_v(1, 2, {1, 2}));
  pool.push_back(melem_v(1, 3, {1, 1}));
  pool.push_back(melem_i_ii_1(1, 6, {1}, 1));
  pool.push_back(melem_i_ii_1(1, 14, {1}, 1));
  pool.push_back(melem_i_ii_1(2, 8, {1}, 1));
  pool.push_back(melem_i_ii_1(2, 24, {2}, 1));
  pool.push_back(melem_i_ii_1(2, 24, {2}, 2));
  pool.push_back(melem_i_ii_2(1, 2, {1}, 2));
  pool.push_back(melem_i_ii_2(1, 2, {1}, 3));
  pool.push_back(melem_i_ii_2(1, 2, {1, 1}, 1));
  pool.push_back(melem_i_ii_2(1, 2, {1, 1}, 2));
  return pool;
}

}  // namespace

TEST_CASE("canonical form constructors enforce their side conditions") {
  CHECK_NOTHROW(melem_i(1, {7}));
  CHECK_THROWS_AS(melem_i(0, {1}), precondition_violation);
  CHECK_THROWS_AS(melem_i(3, {}), precondition_violation);
  CHECK_THROWS_AS(melem_i(3, {0}), precondition_violation);

  CHECK_NOTHROW(melem_ii(5, 3));
  CHECK_THROWS_AS(melem_ii(5, 0), precondition_violation);
  CHECK_THROWS_AS(melem_ii(0, 3), precondition_violation);

  CHECK_NOTHROW(melem_iii(5));
  CHECK_NOTHROW(melem_iii(2));  // even but below every reservoir
  // 6, 14, 22 lie in reservoirs, so their full columns are not type III.
  CHECK_THROWS_AS(melem_iii(6), precondition_violation);
  CHECK_THROWS_AS(melem_iii(14), precondition_violation);
  CHECK_THROWS_AS(melem_iii(22), precondition_violation);

  CHECK_NOTHROW(melem_iv(1, 2, {1}));
  CHECK_THROWS_AS(melem_iv(2, 2, {1}), precondition_violation);
  CHECK_THROWS_AS(melem_iv(2, 1, {1}), precondition_violation);
  CHECK_THROWS_AS(melem_iv(1, 2, {1, 1}), precondition_violation);

  CHECK_NOTHROW(melem_v(1, 2, {1, 1}));
  CHECK_THROWS_AS(melem_v(1, 2, {1}), precondition_violation);

  CHECK_NOTHROW(melem_i_ii_1(1, 6, {1}, 1));
  CHECK_NOTHROW(melem_i_ii_1(2, 24, {2}, 2));
  // bound must stay within the sequence head
  CHECK_THROWS_AS(melem_i_ii_1(1, 6, {1}, 2), precondition_violation);
  CHECK_THROWS_AS(melem_i_ii_1(1, 6, {1}, 0), precondition_violation);
  // 5 is in no reservoir, 6 decodes over column 1 (not 2), head mismatch
  CHECK_THROWS_AS(melem_i_ii_1(1, 5, {1}, 1), precondition_violation);
  CHECK_THROWS_AS(melem_i_ii_1(2, 6, {1}, 1), precondition_violation);
  CHECK_THROWS_AS(melem_i_ii_1(1, 6, {2}, 1), precondition_violation);
  CHECK_THROWS_AS(melem_i_ii_1(1, 6, {1, 1}, 1), precondition_violation);

  CHECK_NOTHROW(melem_i_ii_2(1, 2, {1}, 2));
  CHECK_NOTHROW(melem_i_ii_2(1, 2, {1, 1}, 1));
  // the boundary shape belongs to the other union type
  CHECK_THROWS_AS(melem_i_ii_2(1, 2, {1}, 1), precondition_violation);
  CHECK_THROWS_AS(melem_i_ii_2(1, 2, {2}, 2), precondition_violation);
  CHECK_THROWS_AS(melem_i_ii_2(2, 2, {1}, 2), precondition_violation);
  CHECK_THROWS_AS(melem_i_ii_2(1, 2, {1}, 0), precondition_violation);
}

TEST_CASE("membership matches the written denotations") {
  MElem ii = melem_ii(5, 3);
  CHECK(member(ii, PElem{5, Nat(2)}));
  CHECK(member(ii, PElem{5, Nat(3)}));
  CHECK_FALSE(member(ii, PElem{5, Nat(4)}));
  CHECK_FALSE(member(ii, PElem{5, Seq{1}}));
  CHECK_FALSE(member(ii, PElem{4, Nat(2)}));

  MElem i = melem_i(4, {2, 7});
  CHECK(member(i, PElem{4, Seq{2}}));
  CHECK(member(i, PElem{4, Seq{2, 7}}));
  CHECK_FALSE(member(i, PElem{4, Seq{2, 7, 1}}));
  CHECK_FALSE(member(i, PElem{4, Seq{7}}));
  CHECK_FALSE(member(i, PElem{4, Nat(1)}));
  CHECK_FALSE(member(i, PElem{5, Seq{2}}));

  MElem iii = melem_iii(5);
  CHECK(member(iii, PElem{5, Nat(40)}));
  CHECK(member(iii, PElem{5, Seq{9, 9}}));
  CHECK(member(iii, PElem{5, LTop{}}));
  CHECK_FALSE(member(iii, PElem{6, Nat(1)}));

  MElem iv = melem_iv(1, 2, {1});  // full column 6
  CHECK(member(iv, PElem{6, LTop{}}));
  CHECK(member(iv, PElem{6, Nat(100)}));
  CHECK(member(iv, PElem{6, Seq{5, 5}}));
  CHECK(member(iv, PElem{1, Seq{1}}));
  CHECK_FALSE(member(iv, PElem{1, Seq{1, 1}}));
  CHECK_FALSE(member(iv, PElem{1, Nat(1)}));
  CHECK(member(iv, PElem{2, Nat(1)}));
  CHECK_FALSE(member(iv, PElem{2, Nat(2)}));
  CHECK_FALSE(member(iv, PElem{2, Seq{1}}));

  MElem v = melem_v(1, 2, {1, 2});  // full column 22, side column 6
  CHECK(member(v, PElem{22, LTop{}}));
  CHECK(member(v, PElem{1, Seq{1}}));
  CHECK(member(v, PElem{1, Seq{1, 2}}));
  CHECK_FALSE(member(v, PElem{1, Seq{2}}));
  CHECK(member(v, PElem{6, Nat(2)}));
  CHECK_FALSE(member(v, PElem{6, Nat(3)}));
  CHECK_FALSE(member(v, PElem{6, LTop{}}));

  MElem u1 = melem_i_ii_1(1, 6, {1}, 1);
  CHECK(member(u1, PElem{1, Seq{1}}));
  CHECK(member(u1, PElem{6, Nat(1)}));
  CHECK_FALSE(member(u1, PElem{6, Nat(2)}));
  CHECK_FALSE(member(u1, PElem{6, LTop{}}));

  MElem u2 = melem_i_ii_2(1, 2, {1}, 2);
  CHECK(member(u2, PElem{1, Seq{1}}));
  CHECK(member(u2, PElem{6, Nat(2)}));
  CHECK_FALSE(member(u2, PElem{6, Nat(3)}));

  for (const MElem& e : canonical_pool())
    CHECK_FALSE(member(e, PElem{1000000007, Nat(1)}));
}

TEST_CASE("principal ideals classify by column shape") {
  CHECK(classify_principal(PElem{4, Seq{2, 7}}) == melem_i(4, {2, 7}));
  CHECK(classify_principal(PElem{5, Nat(3)}) == melem_ii(5, 3));
  CHECK(classify_principal(PElem{5, LTop{}}) == melem_iii(5));
  CHECK(classify_principal(PElem{2, LTop{}}) == melem_iii(2));
  CHECK(classify_principal(PElem{6, LTop{}}) == melem_iv(1, 2, {1}));
  CHECK(classify_principal(PElem{18, LTop{}}) == melem_iv(1, 2, {3}));
  CHECK(classify_principal(PElem{14, LTop{}}) == melem_v(1, 2, {1, 1}));
  CHECK(classify_principal(PElem{22, LTop{}}) == melem_v(1, 2, {1, 2}));
  CHECK(classify_principal(PElem{12, LTop{}}) == melem_iv(1, 3, {2}));
  CHECK(classify_principal(PElem{24, LTop{}}) == melem_iv(2, 3, {2}));
  CHECK_THROWS_AS(classify_principal(PElem{0, Nat(1)}), precondition_violation);
  CHECK_THROWS_AS(classify_principal(PElem{3, Nat(0)}), precondition_violation);
}

TEST_CASE("text form round trips and rejects junk") {
  CHECK(melem_str(melem_i_ii_1(1, 6, {1}, 1)) == "I+II1(1,6;[1];1)");
  CHECK(melem_str(melem_i_ii_2(1, 2, {1, 1}, 2)) == "I+II2(1,2;[1,1];2)");
  CHECK(melem_str(melem_iv(1, 2, {1})) == "IV(1,2;[1])");
  CHECK(melem_str(melem_ii(5, 3)) == "II(5;3)");
  CHECK(melem_str(melem_empty()) == "empty");

  for (const MElem& e : canonical_pool()) {
    auto back = melem_parse(melem_str(e));
    REQUIRE(back.has_value());
    CHECK(*back == e);
  }

  CHECK_FALSE(melem_parse("").has_value());
  CHECK_FALSE(melem_parse("bogus").has_value());
  CHECK_FALSE(melem_parse("I(1)").has_value());
  CHECK_FALSE(melem_parse("III(6)").has_value());
  CHECK_FALSE(melem_parse("IV(2,1;[1])").has_value());
  CHECK_FALSE(melem_parse("I+II1(1,5;[1];1)").has_value());
  CHECK_FALSE(melem_parse("I+II2(1,2;[1];1)").has_value());
  CHECK_FALSE(melem_parse("II(5;3").has_value());
}

TEST_CASE("classification agrees with the order window extensionally") {
  const Truncation& t = small_window();
  for (std::size_t i = 0; i < t.elems.size(); ++i) {
    MElem e = classify_principal(t.elems[i]);
    CHECK(t.restrict_denotation(e) == t.down_of(i));
  }
}

TEST_CASE("canonical values denote pairwise distinct sets") {
  const Truncation& t = big_window();
  auto pool = canonical_pool();
  std::vector<ElemSet> dens;
  for (const MElem& e : pool) dens.push_back(t.restrict_denotation(e));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      INFO(melem_str(pool[i]) << " vs " << melem_str(pool[j]));
      CHECK(dens[i] != dens[j]);
    }
}

TEST_CASE("containment test matches extensional containment") {
  const Truncation& t = big_window();
  auto pool = canonical_pool();
  std::vector<ElemSet> dens;
  for (const MElem& e : pool) dens.push_back(t.restrict_denotation(e));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      INFO(melem_str(pool[i]) << " vs " << melem_str(pool[j]));
      CHECK(subset(pool[i], pool[j]) == dens[i].is_subset_of(dens[j]));
    }
}

TEST_CASE("pinned intersection results") {
  auto probe = [](const MElem& a, const MElem& b, const MElem& want) {
    INFO(melem_str(a) << " meet " << melem_str(b));
    CHECK(intersect(a, b) == want);
    CHECK(intersect(b, a) == want);
  };

  // seq and nat fibres of one column are disjoint
  probe(melem_i(1, {1}), melem_ii(1, 3), melem_empty());
  // different columns are disjoint
  probe(melem_i(1, {1}), melem_i(2, {1}), melem_empty());
  probe(melem_iii(5), melem_iii(7), melem_empty());
  probe(melem_ii(5, 3), melem_ii(4, 3), melem_empty());
  probe(melem_iii(3), melem_v(1, 2, {1, 2}), melem_empty());

  probe(melem_ii(5, 3), melem_ii(5, 7), melem_ii(5, 3));
  probe(melem_i(4, {2, 3}), melem_i(4, {2}), melem_i(4, {2}));
  probe(melem_i(4, {2, 3}), melem_i(4, {3}), melem_empty());
  probe(melem_iii(5), melem_ii(5, 9), melem_ii(5, 9));
  probe(melem_iii(5), melem_i(5, {4, 4}), melem_i(5, {4, 4}));

  // two full columns meeting smaller pieces
  probe(melem_iii(1), melem_iv(1, 2, {1}), melem_i(1, {1}));
  probe(melem_iii(2), melem_iv(1, 2, {1}), melem_ii(2, 1));

  // full-column principals against each other
  probe(melem_iv(1, 6, {1}), melem_iv(1, 2, {1}), melem_i_ii_1(1, 6, {1}, 1));
  probe(melem_iv(3, 4, {1}), melem_iv(1, 3, {1}), melem_ii(4, 1));
  probe(melem_iv(1, 2, {1}), melem_iv(1, 3, {1}), melem_i(1, {1}));
  probe(melem_v(1, 2, {1, 2}), melem_v(1, 2, {1, 3}), melem_i_ii_2(1, 2, {1}, 2));
  probe(melem_v(14, 15, {1, 1}), melem_v(1, 2, {1, 1}), melem_i(14, {1, 1}));
  probe(melem_v(1, 2, {1, 2}), melem_v(1, 2, {1, 2, 1}), melem_i_ii_2(1, 2, {1, 2}, 1));
  probe(melem_v(6, 7, {1, 1}), melem_v(1, 2, {1, 1}), melem_empty());
  probe(melem_iv(1, 14, {1}), melem_v(1, 2, {1, 1}), melem_i_ii_1(1, 14, {1}, 1));
  probe(melem_iv(1, 2, {1}), melem_v(1, 2, {1, 3}), melem_i_ii_2(1, 2, {1}, 3));

  // unions against principals
  probe(melem_i_ii_2(1, 2, {1, 1}, 3), melem_iv(1, 14, {1}), melem_i_ii_1(1, 14, {1}, 1));
  probe(melem_i_ii_1(1, 6, {1}, 1), melem_ii(6, 5), melem_ii(6, 1));
  probe(melem_i_ii_1(1, 6, {1}, 1), melem_i(1, {1, 4}), melem_i(1, {1}));
  probe(melem_i_ii_1(1, 6, {1}, 1), melem_iv(2, 6, {1}), melem_ii(6, 1));
  probe(melem_i_ii_1(1, 6, {1}, 1), melem_iv(1, 6, {2}), melem_ii(6, 1));
  probe(melem_iv(1, 2, {1}), melem_i_ii_1(1, 6, {1}, 1), melem_i_ii_1(1, 6, {1}, 1));
  probe(melem_v(1, 2, {1, 2}), melem_i_ii_2(1, 2, {1, 2}, 1), melem_i_ii_2(1, 2, {1, 2}, 1));

  // empty absorbs
  probe(melem_empty(), melem_iii(5), melem_empty());
  probe(melem_empty(), melem_empty(), melem_empty());
}

TEST_CASE("intersection is the extensional meet on the small window") {
  const Truncation& t = small_window();
  std::size_t n = t.elems.size();
  std::vector<MElem> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = classify_principal(t.elems[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      MElem r = intersect(cls[i], cls[j]);
      ElemSet want = t.down_of(i) & t.down_of(j);
      INFO(pelem_str(t.elems[i]) << " meet " << pelem_str(t.elems[j]) << " gave " << melem_str(r));
      CHECK(t.restrict_denotation(r) == want);
      CHECK(intersect(cls[j], cls[i]) == r);
    }
}

TEST_CASE("intersection is the extensional meet on sampled big-window pairs") {
  const Truncation& t = big_window();
  std::size_t n = t.elems.size();
  std::mt19937_64 rng(0x5eedULL);
  for (int trial = 0; trial < 4000; ++trial) {
    std::size_t i = rng() % n, j = rng() % n;
    MElem r = intersect(classify_principal(t.elems[i]), classify_principal(t.elems[j]));
    ElemSet want = t.down_of(i) & t.down_of(j);
    INFO(pelem_str(t.elems[i]) << " meet " << pelem_str(t.elems[j]) << " gave " << melem_str(r));
    REQUIRE(t.restrict_denotation(r) == want);
  }
}

TEST_CASE("intersection is idempotent, commutative, associative on the pool") {
  const Truncation& t = big_window();
  auto pool = canonical_pool();
  for (const MElem& a : pool) CHECK(intersect(a, a) == a);
  for (const MElem& a : pool)
    for (const MElem& b : pool) {
      MElem ab = intersect(a, b);
      CHECK(ab == intersect(b, a));
      CHECK(t.restrict_denotation(ab) ==
            (t.restrict_denotation(a) & t.restrict_denotation(b)));
    }
  std::mt19937_64 rng(0xa550cULL);
  for (int trial = 0; trial < 2000; ++trial) {
    const MElem& a = pool[rng() % pool.size()];
    const MElem& b = pool[rng() % pool.size()];
    const MElem& c = pool[rng() % pool.size()];
    CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
  }
}

TEST_CASE("intersection is the greatest lower bound under containment") {
  auto pool = canonical_pool();
  for (const MElem& a : pool)
    for (const MElem& b : pool) {
      MElem r = intersect(a, b);
      CHECK(subset(r, a));
      CHECK(subset(r, b));
      for (const MElem& z : pool)
        if (subset(z, a) && subset(z, b)) {
          INFO(melem_str(z) << " under " << melem_str(a) << " and " << melem_str(b));
          CHECK(subset(z, r));
        }
    }
}
