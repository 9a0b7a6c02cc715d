#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace spaut;

TEST(DigitWord, EvaluatesPairOfTernaryRows) {
  const std::vector<std::string> rows{"2110", "0020"};
  const auto w = DigitWord::from_strings(3, rows);
  EXPECT_EQ(evaluate(w), (Tuple{66, 6}));
  EXPECT_EQ(w.to_strings(), rows);
}

TEST(DigitWord, ExpansionHasNoLeadingZeroSymbol) {
  const auto w = expand({66, 6}, 3);
  EXPECT_EQ(w.to_strings(), (std::vector<std::string>{"2110", "0020"}));
  EXPECT_TRUE(expand({0, 0}, 5).empty());
  EXPECT_EQ(expand({BigInt(1)}, 2).to_strings(), std::vector<std::string>{"1"});
}

TEST(DigitWord, ExpandEvaluateRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 9);
    const int d = 1 + static_cast<int>(rng() % 3);
    Tuple t;
    for (int c = 0; c < d; ++c) t.emplace_back(static_cast<unsigned long>(rng() % 100000));
    const auto w = expand(t, k);
    EXPECT_EQ(evaluate(w), t);
    if (!w.empty()) {
      EXPECT_NE(w.symbols.front(), 0u);
    }
  }
}

TEST(DigitWord, LeadingZerosDoNotChangeValue) {
  const auto w = DigitWord::from_string(2, "000101");
  EXPECT_EQ(evaluate(w), Tuple{5});
  EXPECT_EQ(evaluate(DigitWord{{2, 1}, {}}), Tuple{0});
}

TEST(Alphabet, EncodingIsBaseKWithFirstCoordinateMostSignificant) {
  const Alphabet a{3, 2};
  EXPECT_EQ(a.size(), 9u);
  const std::vector<int> digits{2, 1};
  EXPECT_EQ(a.encode(digits), 7u);
  EXPECT_EQ(a.digits(7), digits);
  EXPECT_EQ(a.digit(7, 0), 2);
  EXPECT_EQ(a.digit(7, 1), 1);
  const std::vector<int> second{1};
  EXPECT_EQ(a.project(7, second), 1u);
}

TEST(Alphabet, RejectsBadDigits) {
  const Alphabet a{2, 2};
  const std::vector<int> bad{2, 0};
  const std::vector<int> short_tuple{1};
  EXPECT_THROW(a.encode(bad), InputError);
  EXPECT_THROW(a.encode(short_tuple), InputError);
  EXPECT_THROW((Alphabet{1, 1}.validate()), InputError);
}

TEST(Numeric, PowersAndLogs) {
  EXPECT_EQ(pow(8ul, 12), BigInt("68719476736"));
  EXPECT_NEAR(spaut::log10(pow(10ul, 400)), 400.0, 1e-9);
  EXPECT_NEAR(spaut::log10(Rational(1, 1000)), -3.0, 1e-12);
  EXPECT_TRUE(is_integral(Rational(6, 3)));
  EXPECT_FALSE(is_integral(Rational(1, 3)));
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
}

TEST(Numeric, TupleOrderBySumThenLexicographic) {
  std::vector<Tuple> v{{3, 0}, {0, 1}, {1, 2}, {2, 1}, {0, 3}};
  std::sort(v.begin(), v.end(), TupleOrder{});
  EXPECT_EQ(v, (std::vector<Tuple>{{0, 1}, {0, 3}, {1, 2}, {2, 1}, {3, 0}}));
  EXPECT_EQ(format_tuple({66, 6}), "66,6");
}
