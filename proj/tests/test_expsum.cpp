#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"

using namespace spaut;

namespace {

SparseTerm term(const std::string& text, int base = 2, int dim = 1) {
  return parse_terms("base " + std::to_string(base) + "\ndim " + std::to_string(dim) + "\n" + text + "\n").terms.at(0);
}

/// Values of the term with every repetition count <= reps, by assembling words.
std::set<Tuple> brute_values(const SparseTerm& t, std::size_t reps, const BigInt& bound) {
  std::set<Tuple> out;
  std::vector<std::size_t> n(t.star_count(), 0);
  for (;;) {
    const Tuple v = evaluate(assemble(t, n));
    if (std::all_of(v.begin(), v.end(), [&](const BigInt& x) { return x <= bound; })) out.insert(v);
    std::size_t i = 0;
    while (i < n.size() && n[i] == reps) n[i++] = 0;
    if (i == n.size()) break;
    ++n[i];
  }
  return out;
}

}  // namespace

TEST(ExpSum, FigureOneClosedForm) {
  const auto f = to_expsum(term("\"11\" (\"0\")* \"1\""));
  EXPECT_EQ(f.coefficients[0], (std::vector<Rational>{1, 6}));
  EXPECT_EQ(format_expsum(f), std::vector<std::string>{"1 + 6*2^(1*n1)"});
  for (std::size_t n = 0; n < 10; ++n) EXPECT_EQ(eval_expsum(f, {n}), Tuple{BigInt(3) * pow(2ul, n + 1) + 1});
}

TEST(ExpSum, RationalCoefficients) {
  // "1" ("01")* in base 2 gives 1, 5, 21, ...: (4^{n+1} - 1) / 3 = -1/3 + 4/3 * 4^n.
  const auto f = to_expsum(term("\"1\" (\"01\")* \"\""));
  EXPECT_EQ(f.coefficients[0], (std::vector<Rational>{Rational(-1, 3), Rational(4, 3)}));
  EXPECT_EQ(eval_expsum(f, {2}), Tuple{21});
  EXPECT_EQ(format_expsum(f), std::vector<std::string>{"-1/3 + 4/3*2^(2*n1)"});
}

TEST(ExpSum, NoStarsIsConstant) {
  const auto f = to_expsum(term("\"2,1 1,0 0,0\"", 3, 2));
  EXPECT_EQ(eval_expsum(f, {}), (Tuple{21, 9}));
  EXPECT_THROW(eval_expsum(f, {1}), InputError);
}

TEST(ExpSum, MatchesAssembledWordsOnRandomTerms) {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<std::size_t> rep(0, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    const Alphabet alphabet{2 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 3)};
    const auto t = oracle::random_term(rng, alphabet, 3, 3, 3);
    const auto f = to_expsum(t);
    std::vector<std::size_t> n(t.star_count());
    for (auto& x : n) x = rep(rng);
    ASSERT_EQ(eval_expsum(f, n), evaluate(assemble(t, n))) << format_term(t);
  }
}

TEST(Enumerate, FigureOneUpToThousand) {
  const auto f = to_expsum(term("\"11\" (\"0\")* \"1\""));
  EXPECT_EQ(enumerate_values(f, 1000), (std::vector<Tuple>{{7}, {13}, {25}, {49}, {97}, {193}, {385}, {769}}));
  EXPECT_TRUE(enumerate_values(f, 6).empty());
}

TEST(Enumerate, ZeroLoopsAndLeadingZeros) {
  // Loops of zeros leave the value unchanged; each value appears once.
  const auto f = to_expsum(term("(\"0\")* \"1\" (\"0\")* \"\""));
  EXPECT_EQ(enumerate_values(f, 100), (std::vector<Tuple>{{1}, {2}, {4}, {8}, {16}, {32}, {64}}));
}

TEST(Enumerate, MatchesBruteForceOnRandomTerms) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    const Alphabet alphabet{2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2)};
    const auto t = oracle::random_term(rng, alphabet, 2, 2, 2);
    const BigInt bound = 2000;
    // Values <= 2000 need at most 11 digits, so a repetition count of 12 suffices.
    const auto expected = brute_values(t, 12, bound);
    const auto got = enumerate_values(to_expsum(t), bound);
    ASSERT_EQ(std::set<Tuple>(got.begin(), got.end()), expected) << format_term(t);
    ASSERT_TRUE(std::is_sorted(got.begin(), got.end(), TupleOrder{}));
  }
}

TEST(Enumerate, ExponentsReproduceValues) {
  const auto f = to_expsum(term("\"1\" (\"0\")* \"1\" (\"0\")* \"1\""));
  const auto pairs = enumerate_with_exponents(f, 100000);
  ASSERT_FALSE(pairs.empty());
  for (const auto& [value, n] : pairs) EXPECT_EQ(eval_expsum(f, n), value);
  // 1 0^a 1 0^b 1 with length <= 17: pairs (a, b) with a + b <= 14.
  EXPECT_EQ(pairs.size(), 120u);
}

TEST(Enumerate, LargeBoundStaysPolylogarithmic) {
  const auto f = to_expsum(term("\"1\" (\"0\")* \"1\" (\"0\")* \"1\""));
  const auto values = enumerate_values(f, pow(2ul, 200));
  // Length <= 200, so a + b <= 197.
  EXPECT_EQ(values.size(), 198u * 199u / 2u);
}
