#include "gtm/expansion.hpp"
#include "support/corpus.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gtm;

TEST(Expand, ZeroIsEmpty) {
  const auto d = expand(0u, 2);
  EXPECT_TRUE(d.terms.empty());
  EXPECT_EQ(d.value(), 0);
}

TEST(Expand, FourInBaseThree) {
  const auto d = expand(4u, 3);
  ASSERT_EQ(d.terms.size(), 2u);
  EXPECT_EQ(d.terms[0], (DigitTerm{1, 0}));
  EXPECT_EQ(d.terms[1], (DigitTerm{1, 1}));
}

TEST(Expand, RejectsBadArguments) {
  EXPECT_THROW(expand(5u, 1), invalid_argument);
  EXPECT_THROW(expand(-3, 10), invalid_argument);
  EXPECT_THROW(expand(BigInt(-1), 2), invalid_argument);
}

TEST(Expand, RandomReconstructionAndDigitStrings) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() % 1'000'000;
    const std::uint32_t k = 2 + rng() % 15;
    const auto d = expand(n, k);
    ASSERT_TRUE(d.is_valid());
    ASSERT_EQ(d.value(), n);
    // Bijection onto valid expansions: re-expanding the value is the identity.
    ASSERT_EQ(expand(d.value(), k), d);
    // Nonzero positions of the literal digit string are exactly the terms.
    const std::string digits = oracle::digit_string(n, k);
    std::size_t term = 0;
    for (std::size_t pos = 0; pos < digits.size(); ++pos) {
      const auto digit = oracle::digit_of(digits[digits.size() - 1 - pos]);
      if (digit == 0) continue;
      ASSERT_LT(term, d.terms.size());
      EXPECT_EQ(d.terms[term].coeff, digit);
      EXPECT_EQ(d.terms[term].exponent, pos);
      ++term;
    }
    EXPECT_EQ(term, d.terms.size());
  }
}

TEST(Expand, BigIntegers) {
  const BigInt n = pow_big(7, 90) * 3 + 5;
  const auto d = expand(n, 7);
  ASSERT_EQ(d.terms.size(), 2u);
  EXPECT_EQ(d.terms[0], (DigitTerm{5, 0}));
  EXPECT_EQ(d.terms[1], (DigitTerm{3, 90}));
  EXPECT_EQ(d.value(), n);
}

TEST(DigitIndicator, Examples) {
  EXPECT_EQ(digit_indicator(4u, 1, 1, 3), 1);
  EXPECT_EQ(digit_indicator(4u, 2, 0, 3), 0);
  EXPECT_THROW(digit_indicator(4u, 0, 0, 3), invalid_argument);
  EXPECT_THROW(digit_indicator(4u, 3, 0, 3), invalid_argument);
}

TEST(DigitIndicator, AgreesWithExpansionMembership) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t n = rng() % 1'000'000;
    const std::uint32_t k = 2 + rng() % 6;
    const std::uint32_t s = 1 + rng() % (k - 1);
    const std::uint64_t y = rng() % 22;
    const auto d = expand(n, k);
    const bool member =
        std::find(d.terms.begin(), d.terms.end(), DigitTerm{s, y}) != d.terms.end();
    ASSERT_EQ(digit_indicator(n, s, y, k), member ? 1 : 0);
  }
}

TEST(DigitCount, Examples) {
  for (std::uint32_t s = 1; s < 5; ++s) EXPECT_EQ(digit_count(0u, s, 5), 0u);
  EXPECT_EQ(digit_count(5u, 1, 2), 2u);
  EXPECT_EQ(digit_count_mod(5u, 1, 2, 2), 0u);
  EXPECT_EQ(digit_count_mod(7u, 1, 2, 2), 1u);
  EXPECT_THROW(digit_count_mod(7u, 1, 2, 1), invalid_argument);
}

TEST(DigitCount, AgreesWithStringScanAndSumsToNonzeroDigits) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() % 1'000'000;
    const std::uint32_t k = 2 + rng() % 9;
    const std::string digits = oracle::digit_string(n, k);
    std::uint64_t total = 0;
    for (std::uint32_t s = 1; s < k; ++s) {
      const auto expected = static_cast<std::uint64_t>(
          std::count_if(digits.begin(), digits.end(),
                        [&](char c) { return n != 0 && oracle::digit_of(c) == s; }));
      ASSERT_EQ(digit_count(n, s, k), expected);
      total += expected;
    }
    EXPECT_EQ(total, expand(n, k).terms.size());
  }
}

namespace {

void expect_gap_postcondition(const GapMultipleResult& r, std::uint64_t l, std::uint32_t k,
                              std::uint64_t t) {
  ASSERT_GT(r.x, 0);
  const auto d = expand(r.x * l, k);
  ASSERT_FALSE(d.terms.empty());
  EXPECT_EQ(d, r.expansion);
  EXPECT_EQ(d.terms[0].coeff, 1u);
  EXPECT_EQ(d.terms[0].exponent, r.leading_exponent);
  if (d.terms.size() > 1) {
    ASSERT_TRUE(r.gap.has_value());
    EXPECT_EQ(*r.gap, d.terms[1].exponent - d.terms[0].exponent);
    EXPECT_GT(*r.gap, t);
  } else {
    EXPECT_FALSE(r.gap.has_value());
  }
}

}  // namespace

TEST(GapMultiple, UnitLBinaryGivesNine) {
  const auto r = gap_multiple(1, 2, 2);
  expect_gap_postcondition(r, 1, 2, 2);
  EXPECT_EQ(r.x, 9);  // 9 = 1 + 2^3
  EXPECT_EQ(r.leading_exponent, 0u);
  EXPECT_EQ(r.gap, 3u);
}

TEST(GapMultiple, ThreeBinaryAgainstBruteForceMinimum) {
  const auto minimal = oracle::minimal_gap_multiple(3, 2, 2, 1'000'000);
  ASSERT_TRUE(minimal.has_value());
  EXPECT_EQ(*minimal, 3u);  // 9 = 3 * 3 = 1001_2
  const auto r = gap_multiple(3, 2, 2);
  expect_gap_postcondition(r, 3, 2, 2);
  EXPECT_GE(r.x, *minimal);
}

TEST(GapMultiple, PowerOfBaseUsesDirectConstruction) {
  for (std::uint32_t k : {2u, 3u, 10u})
    for (std::uint64_t a = 0; a < 5; ++a)
      for (std::uint64_t t = 0; t < 4; ++t) {
        const BigInt l = pow_big(k, a);
        const auto r = gap_multiple(l, k, t);
        EXPECT_EQ(r.x, 1 + pow_big(k, t + 1));
        EXPECT_EQ(r.leading_exponent, a);
        EXPECT_EQ(r.gap, t + 1);
      }
}

TEST(GapMultiple, GridAgainstBruteForce) {
  for (std::uint64_t l = 1; l <= 30; ++l)
    for (std::uint32_t k : {2u, 3u, 4u, 5u, 6u, 10u})
      for (std::uint64_t t = 0; t <= 3; ++t) {
        const auto r = gap_multiple(l, k, t);
        expect_gap_postcondition(r, l, k, t);
        const auto minimal = oracle::minimal_gap_multiple(l, k, t, 1'000'000);
        ASSERT_TRUE(minimal.has_value());
        EXPECT_GE(r.x, *minimal);
      }
}

TEST(GapMultiple, LargeThresholdStaysExact) {
  const auto r = gap_multiple(BigInt(997) * 6, 6, 40);
  EXPECT_EQ(r.expansion.value(), r.x * 997 * 6);
  EXPECT_GT(*r.gap, 40u);
}

TEST(GapMultiple, RejectsInvalid) {
  EXPECT_THROW(gap_multiple(0, 2, 1), invalid_argument);
  EXPECT_THROW(gap_multiple(3, 1, 1), invalid_argument);
}

TEST(GapMultiplePair, SharedLeadingExponent) {
  auto [a, b] = gap_multiple_pair(3, 2, 1, 4);
  expect_gap_postcondition(a, 3, 2, 1);
  expect_gap_postcondition(b, 3, 2, 4);
  EXPECT_EQ(a.leading_exponent, b.leading_exponent);

  auto [c, d] = gap_multiple_pair(1, 3, 0, 0);
  EXPECT_EQ(c.x, d.x);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t l = 1 + rng() % 500;
    const std::uint32_t k = 2 + rng() % 11;
    const std::uint64_t t = rng() % 6, t2 = rng() % 6;
    auto [x, y] = gap_multiple_pair(l, k, t, t2);
    expect_gap_postcondition(x, l, k, t);
    expect_gap_postcondition(y, l, k, t2);
    ASSERT_EQ(x.leading_exponent, y.leading_exponent);
  }
}

TEST(Factorize, SmallNumbers) {
  const auto f = factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].prime, 2u);
  EXPECT_EQ(f[0].exponent, 3u);
  EXPECT_EQ(f[1].prime, 3u);
  EXPECT_EQ(f[1].exponent, 2u);
  EXPECT_EQ(f[2].prime, 5u);
  EXPECT_EQ(f[2].exponent, 1u);
  EXPECT_TRUE(factorize(1).empty());
}
