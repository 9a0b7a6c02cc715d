#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"

using namespace spaut;

namespace {

Dfa data(const char* name) { return load_automaton(oracle::data_path(name)); }

Dfa random_dfa(std::mt19937_64& rng, Alphabet alphabet, std::size_t n) {
  Dfa a(alphabet, n, 0);
  for (State q = 0; q < n; ++q) {
    a.set_accepting(q, rng() % 3 == 0);
    for (Symbol s = 0; s < alphabet.size(); ++s) a.set_transition(q, s, static_cast<State>(rng() % n));
  }
  return a;
}

}  // namespace

TEST(Classify, FigureOneIsSparseOfDegreeOne) {
  const auto r = classify(data("fig1.aut"));
  EXPECT_TRUE(r.is_sparse);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.poly_degree, 1u);
}

TEST(Classify, UniversalLanguageIsNotSparse) {
  const auto r = classify(universal_dfa({2, 1}));
  ASSERT_FALSE(r.is_sparse);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->first_cycle, r.witness->second_cycle);
  EXPECT_GT(r.alpha, 1.0);
}

TEST(Classify, EmptyLanguageIsSparseOfDegreeZero) {
  const auto r = classify(empty_dfa({3, 1}));
  EXPECT_TRUE(r.is_sparse);
  EXPECT_EQ(r.poly_degree, 0u);
  EXPECT_EQ(r.counts.back(), 0);
}

TEST(Classify, DegreeCountsChainedLoops) {
  // 1 0* 1 0* 1: quadratic growth.
  const auto t = parse_terms("base 2\n\"1\" (\"0\")* \"1\" (\"0\")* \"1\"\n");
  EXPECT_EQ(classify(term_to_dfa(t.terms[0])).poly_degree, 2u);
  EXPECT_EQ(classify(term_to_dfa(parse_terms("base 2\n\"101\"\n").terms[0])).poly_degree, 0u);
}

TEST(Classify, WitnessWordsReturnToTheWitnessState) {
  std::mt19937_64 rng(21);
  int seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Dfa a = random_dfa(rng, {2, 1}, 5);
    const auto r = classify(a);
    if (r.is_sparse) continue;
    ++seen;
    const auto& w = *r.witness;
    // Replaying prefix, either cycle in any order, then suffix, must be accepted.
    const Dfa m = minimize(a);
    for (const auto& middle : {w.first_cycle + w.second_cycle, w.second_cycle + w.first_cycle, w.first_cycle}) {
      const auto word = w.prefix + middle + w.suffix;
      EXPECT_TRUE(oracle::simulate(m, word.symbols));
    }
    EXPECT_NE(w.first_cycle.symbols.front(), w.second_cycle.symbols.front());
  }
  EXPECT_GT(seen, 20);
}

TEST(Classify, AgreesWithSimpleCycleOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const Dfa a = random_dfa(rng, {2, 1}, n);
    ASSERT_EQ(classify(a).is_sparse, oracle::sparse_by_cycles(minimize(a))) << format_automaton(a);
  }
}

TEST(CountWords, FigureOneSmallLengths) {
  const auto c = count_words(data("fig1.aut"), 5);
  EXPECT_EQ(c, (std::vector<BigInt>{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(count_words(empty_dfa({2, 1}), 4), std::vector<BigInt>(5, BigInt(0)));
  const auto u = count_words(universal_dfa({2, 1}), 70);
  EXPECT_EQ(u[70], pow(2ul, 70));
}

TEST(CountWords, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const Dfa a = random_dfa(rng, {2, 1}, 1 + static_cast<std::size_t>(trial % 6));
    ASSERT_EQ(count_words(a, 12), oracle::brute_counts(a, 12));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Dfa a = random_dfa(rng, {3, 1}, 4);
    ASSERT_EQ(count_words(a, 7), oracle::brute_counts(a, 7));
  }
}

TEST(CountWords, SparseCountsBoundedByTermCountPolynomial) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Dfa a = oracle::random_sparse_dfa(rng, {2, 1});
    const auto r = classify(a, 30);
    ASSERT_TRUE(r.is_sparse);
    for (std::size_t n = 0; n < r.counts.size(); ++n) {
      BigInt limit = r.count_constant;
      for (std::size_t i = 0; i < r.poly_degree; ++i) limit *= static_cast<unsigned long>(n + 1);
      ASSERT_LE(r.counts[n], limit) << n;
      if (n > 0) {
        ASSERT_LE(r.counts[n - 1], r.counts[n]);
      }
    }
  }
}

TEST(CountWords, NonSparseCountsDominateAlphaPower) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const Dfa a = random_dfa(rng, {2, 1}, 4);
    const auto r = classify(a, 20);
    if (r.is_sparse) continue;
    ASSERT_GT(r.alpha, 1.0);
    for (std::size_t n = 10; n <= 20; ++n) ASSERT_GE(r.counts[n].get_d(), std::pow(r.alpha, static_cast<double>(n)));
  }
}

TEST(Growth, FigureOneIsLinear) {
  const auto g = growth_estimate(data("fig1.aut"), 64);
  EXPECT_EQ(g.kind, GrowthKind::polynomial);
  EXPECT_NEAR(g.degree, 1.0, 0.2);
}

TEST(Growth, ExponentialRatios) {
  const auto all = growth_estimate(universal_dfa({2, 1}), 20);
  EXPECT_EQ(all.kind, GrowthKind::exponential);
  EXPECT_NEAR(all.ratio, 2.0, 0.05);
  const auto no2 = growth_estimate(data("ternary_no2.aut"), 20);
  EXPECT_EQ(no2.kind, GrowthKind::exponential);
  EXPECT_NEAR(no2.ratio, 2.0, 0.05);
  EXPECT_THROW(growth_estimate(data("fig1.aut"), 4), InputError);
}
