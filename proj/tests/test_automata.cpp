#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace spaut;

namespace {

Dfa fig1() { return load_automaton(oracle::data_path("fig1.aut")); }

Dfa random_dfa(std::mt19937_64& rng, Alphabet alphabet, std::size_t n) {
  Dfa a(alphabet, n, 0);
  for (State q = 0; q < n; ++q) {
    a.set_accepting(q, rng() % 3 == 0);
    for (Symbol s = 0; s < alphabet.size(); ++s) a.set_transition(q, s, static_cast<State>(rng() % n));
  }
  return a;
}

bool same_words(const Dfa& a, const Dfa& b, std::size_t max_len) {
  for (std::size_t n = 0; n <= max_len; ++n) {
    bool same = true;
    oracle::for_each_word(a.num_symbols(), n, [&](const std::vector<Symbol>& w) {
      same = same && oracle::simulate(a, w) == oracle::simulate(b, w);
    });
    if (!same) return false;
  }
  return true;
}

}  // namespace

TEST(Membership, FigureOneAcceptsThreeTimesPowersOfTwoPlusOne) {
  const Dfa a = fig1();
  std::set<long> expected;
  for (long p = 2; 3 * p + 1 <= (1L << 14); p *= 2) expected.insert(3 * p + 1);
  for (long x = 0; x <= (1L << 14); ++x) EXPECT_EQ(member(a, {BigInt(x)}), expected.count(x) == 1) << x;
  EXPECT_FALSE(member(a, {BigInt(14)}));
  EXPECT_TRUE(member(a, {BigInt(7)}));
}

TEST(Membership, MatchesNaiveSimulationInBothDirections) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Dfa a = random_dfa(rng, {3, 2}, 5);
    if (trial % 2) a.set_direction(Direction::lsd_first);
    for (long x = 0; x < 30; ++x)
      for (long y = 0; y < 30; ++y) ASSERT_EQ(member(a, {BigInt(x), BigInt(y)}), oracle::member_naive(a, {BigInt(x), BigInt(y)}));
  }
}

TEST(Membership, RejectsWrongArity) { EXPECT_THROW(member(fig1(), {BigInt(1), BigInt(2)}), InputError); }

TEST(Minimize, PreservesLanguageAndIsMinimal) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Dfa a = random_dfa(rng, {2, 1}, 1 + trial % 6);
    const Dfa m = minimize(a);
    ASSERT_TRUE(same_words(a, m, 9));
    EXPECT_EQ(minimize(m), m);
    // Pairwise distinguishable and reachable: brute-force distinguishing words.
    for (State p = 0; p < m.num_states(); ++p)
      for (State q = p + 1; q < m.num_states(); ++q) {
        bool distinct = false;
        for (std::size_t n = 0; n <= m.num_states() && !distinct; ++n)
          oracle::for_each_word(2, n, [&](const std::vector<Symbol>& w) {
            distinct = distinct || m.is_accepting(run(m, p, w)) != m.is_accepting(run(m, q, w));
          });
        EXPECT_TRUE(distinct);
      }
    EXPECT_TRUE(oracle::bfs_numbered(m));
  }
}

TEST(Minimize, IsomorphicInputsGiveEqualOutputs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Dfa a = random_dfa(rng, {2, 1}, 5);
    // Relabel states by a rotation.
    Dfa b({2, 1}, 5, 1);
    for (State q = 0; q < 5; ++q) {
      b.set_accepting((q + 1) % 5, a.is_accepting(q));
      for (Symbol s = 0; s < 2; ++s) b.set_transition((q + 1) % 5, s, (a.next(q, s) + 1) % 5);
    }
    EXPECT_TRUE(isomorphic(a, b));
    EXPECT_EQ(minimize(a), minimize(b));
  }
}

TEST(Trim, DeadStateLastAndLanguageKept) {
  const Dfa t = trim(fig1());
  EXPECT_EQ(t.num_states(), 5u);
  const State dead = 4;
  for (Symbol s = 0; s < 2; ++s) EXPECT_EQ(t.next(dead, s), dead);
  EXPECT_FALSE(t.is_accepting(dead));
  EXPECT_TRUE(same_words(t, fig1(), 10));
  const Dfa empty = trim(empty_dfa({2, 1}));
  EXPECT_EQ(empty.num_states(), 1u);
  EXPECT_TRUE(is_empty(empty));
  EXPECT_EQ(trim(universal_dfa({2, 1})).num_states(), 1u);
}

TEST(Determinize, SubsetConstructionOfEndsWithOne) {
  Nfa n({2, 1}, 2);
  n.initial = {0};
  n.accepting[1] = 1;
  n.add_edge(0, 0, 0);
  n.add_edge(0, 1, 0);
  n.add_edge(0, 1, 1);
  const Dfa d = minimize(determinize(n));
  EXPECT_EQ(d.num_states(), 2u);
  for (long x = 0; x < 64; ++x) EXPECT_EQ(member(d, {BigInt(x)}), x % 2 == 1);
}

TEST(Reverse, ReversedLanguageKeepsTupleSet) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const Dfa a = random_dfa(rng, {2, 1}, 4);
    const Dfa r = reverse_language(a);
    EXPECT_EQ(r.direction(), Direction::lsd_first);
    for (long x = 0; x < 200; ++x) ASSERT_EQ(member(a, {BigInt(x)}), member(r, {BigInt(x)}));
    EXPECT_EQ(reverse_direction(a), a);
  }
  const Dfa msd = reverse_direction(fig1());
  EXPECT_EQ(msd.direction(), Direction::msd_first);
  EXPECT_TRUE(accepts(msd, DigitWord::from_string(2, "11001")));
  EXPECT_FALSE(accepts(msd, DigitWord::from_string(2, "10011")));
}

TEST(Product, ModesMatchBooleanCombinations) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const Dfa a = random_dfa(rng, {3, 1}, 3);
    const Dfa b = random_dfa(rng, {3, 1}, 4);
    const Dfa i = product(a, b, ProductMode::intersection);
    const Dfa u = product(a, b, ProductMode::union_);
    const Dfa d = product(a, b, ProductMode::difference);
    for (long x = 0; x < 243; ++x) {
      const bool in_a = member(a, {BigInt(x)}), in_b = member(b, {BigInt(x)});
      ASSERT_EQ(member(i, {BigInt(x)}), in_a && in_b);
      ASSERT_EQ(member(u, {BigInt(x)}), in_a || in_b);
      ASSERT_EQ(member(d, {BigInt(x)}), in_a && !in_b);
    }
  }
  EXPECT_THROW(product(random_dfa(rng, {2, 1}, 2), random_dfa(rng, {3, 1}, 2)), InputError);
}

TEST(Canonical, RestrictionDropsLeadingZeroWords) {
  const Dfa c = restrict_to_canonical(universal_dfa({2, 1}));
  EXPECT_TRUE(accepts(c, DigitWord::from_string(2, "")));
  EXPECT_TRUE(accepts(c, DigitWord::from_string(2, "10")));
  EXPECT_FALSE(accepts(c, DigitWord::from_string(2, "010")));
  EXPECT_FALSE(accepts(c, DigitWord::from_string(2, "0")));
  for (long x = 0; x < 100; ++x) EXPECT_TRUE(member(c, {BigInt(x)}));
}

TEST(Project, MatchesTupleProjectionOnSmallValues) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Dfa a = random_dfa(rng, {2, 2}, 4);
    for (int coord = 1; coord <= 2; ++coord) {
      const Dfa p = project(a, {coord});
      EXPECT_EQ(p.dim(), 1);
      // Any witness pair with x < 64 has its other coordinate below 2^(6+|Q|+1).
      const long limit = 1L << (6 + a.num_states() + 1);
      for (long x = 0; x < 64; ++x) {
        bool expected = false;
        for (long y = 0; y < limit && !expected; ++y)
          expected = coord == 1 ? member(a, {BigInt(x), BigInt(y)}) : member(a, {BigInt(y), BigInt(x)});
        ASSERT_EQ(member(p, {BigInt(x)}), expected) << "trial " << trial << " x " << x;
      }
    }
  }
}

TEST(Project, FullCoordinateSetKeepsTheSet) {
  const Dfa pair = load_automaton(oracle::data_path("pair.aut"));
  const Dfa p = project(pair, {2, 1});
  for (long x = 0; x < 40; ++x)
    for (long y = 0; y < 40; ++y) EXPECT_EQ(member(p, {BigInt(x), BigInt(y)}), member(pair, {BigInt(x), BigInt(y)}));
  EXPECT_THROW(project(pair, {3}), InputError);
  EXPECT_THROW(project(pair, {}), InputError);
}
