#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "binorder/counting.hpp"
#include "binorder/error.hpp"
#include "oracles.hpp"

namespace binorder {
namespace {

TEST(SelectionVector, Basics) {
  SelectionVector v = SelectionVector::from_string(4, 2, "10000100");
  EXPECT_TRUE(v.get(0, 0));
  EXPECT_TRUE(v.get(1, 1));
  EXPECT_EQ(v.weighted_sum(), 1u + 5u);
  EXPECT_TRUE(v.in_S(8));
  EXPECT_FALSE(v.in_S(6));
  EXPECT_EQ(v.to_string(), "10000100");
  v.set(1, 1, false);
  EXPECT_EQ(v, SelectionVector::from_string(4, 2, "10000000"));
  EXPECT_THROW(SelectionVector::from_string(4, 2, "101"), Error);
  EXPECT_THROW(SelectionVector::from_string(1, 2, "12"), Error);
}

TEST(CountS, Examples) {
  EXPECT_EQ(count_S_dp(4, 2, 8), 60);
  EXPECT_EQ(count_S_dp(2, 2, 4), 6);
  EXPECT_EQ(count_S_dp(1, 2, 2), 2);
  EXPECT_EQ(count_S_dp(3, 9, 27), 2091);
  EXPECT_EQ(count_S_dp(4, 8, 32), 6428);
  // Every matrix qualifies once the bound exceeds the largest possible sum.
  EXPECT_EQ(count_S_dp(4, 2, 1000), 256);
  EXPECT_EQ(count_S_dp(3, 3, 0), 0);
  EXPECT_EQ(count_S_dp(3, 3, 1), 1);
}

TEST(CountS, MatchesBruteForceForSmallShapes) {
  for (std::uint64_t k = 1; k <= 20; ++k)
    for (std::uint64_t l = 1; k * l <= 20; ++l)
      for (std::uint64_t bound : {k * l, k * l + 3, k * l / 2 + 1, 2 * k * l}) {
        ASSERT_EQ(count_S_dp(k, l, bound), testing::count_S_brute(k, l, bound))
            << "k=" << k << " l=" << l << " bound=" << bound;
      }
}

TEST(CountS, MonotoneInBound) {
  for (std::uint64_t k : {2, 3, 4})
    for (std::uint64_t l : {2, 5, 8}) {
      mpz_class prev = 0;
      for (std::uint64_t bound = 0; bound < 3 * k * l; ++bound) {
        const mpz_class c = count_S_dp(k, l, bound);
        ASSERT_GE(c, prev);
        prev = c;
      }
    }
}

TEST(EnumerateS, Examples) {
  const auto s = enumerate_S(1, 2, 2);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].to_string(), "00");
  EXPECT_EQ(s[1].to_string(), "10");
}

TEST(EnumerateS, OrderedUniqueAndComplete) {
  for (auto [k, l] : {std::pair<std::uint64_t, std::uint64_t>{4, 2}, {3, 3}, {2, 6}, {5, 3}, {1, 12}}) {
    const std::uint64_t m = k * l;
    const auto s = enumerate_S(k, l, m);
    ASSERT_EQ(mpz_class(s.size()), count_S_dp(k, l, m));
    std::vector<std::string> text;
    for (const auto& v : s) {
      ASSERT_TRUE(v.in_S(m));
      text.push_back(v.to_string());
    }
    EXPECT_EQ(text.front(), std::string(m, '0'));
    EXPECT_TRUE(std::is_sorted(text.begin(), text.end()));
    EXPECT_EQ(std::set<std::string>(text.begin(), text.end()).size(), text.size());
  }
}

TEST(EnumerateS, Budget) {
  try {
    enumerate_S(4, 2, 8, 59);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  EXPECT_EQ(enumerate_S(4, 2, 8, 60).size(), 60u);
}

TEST(Lemma8, Examples) {
  const auto a = lemma8_constructive(4, 8);
  EXPECT_EQ(a.w, 1u);
  EXPECT_EQ(a.count, 256);
  EXPECT_TRUE(a.within_hypothesis);
  const auto b = lemma8_constructive(3, 9);
  EXPECT_EQ(b.w, 1u);
  EXPECT_EQ(b.count, 64);
  const auto c = lemma8_constructive(1, 2);
  EXPECT_EQ(c.w, 0u);
  EXPECT_EQ(c.count, 2);
  EXPECT_THROW(lemma8_constructive(4, 1), Error);
}

TEST(Lemma8, ConstructiveFamilyLiesInS) {
  // Rows 0..w with all entries set give sum (w+1) + k w(w+1)/2 < l k = m, so every
  // subset of those rows is in S and the count is a lower bound for |S|.
  for (std::uint64_t k = 1; k <= 8; ++k)
    for (std::uint64_t l = k + 1; l <= 40; ++l) {
      const auto r = lemma8_constructive(k, l);
      SelectionVector full(k, l);
      for (std::uint64_t i = 0; i <= r.w; ++i)
        for (std::uint64_t j = 0; j < k; ++j) full.set(i, j, true);
      ASSERT_TRUE(full.in_S(k * l));
      ASSERT_LE(r.count, count_S_dp(k, l, k * l));
      // w is the largest such integer.
      const std::uint64_t w1 = r.w + 1;
      ASSERT_GE((w1 * k + 2) * (w1 + 1), 2 * l);
    }
}

TEST(CeilTwoPowSqrt, Examples) {
  EXPECT_EQ(ceil_two_pow_sqrt(16), 16);
  EXPECT_EQ(ceil_two_pow_sqrt(64), 256);
  EXPECT_EQ(ceil_two_pow_sqrt(54), 163);
  EXPECT_EQ(ceil_two_pow_sqrt(0), 1);
  EXPECT_EQ(ceil_two_pow_sqrt(1), 2);
  EXPECT_EQ(ceil_two_pow_sqrt(2), 3);
  EXPECT_EQ(ceil_two_pow_sqrt(128), 2546);
}

TEST(CeilTwoPowSqrt, AgreesWithLongDoubleAwayFromIntegers) {
  for (std::uint64_t n = 0; n <= 400; ++n) {
    const long double v = std::pow(2.0L, std::sqrt(static_cast<long double>(n)));
    const long double c = std::ceil(v);
    if (c - v < 1e-9L && c != v) continue;
    if (v - std::floor(v) < 1e-9L && std::floor(v) != v) continue;
    ASSERT_EQ(ceil_two_pow_sqrt(n), mpz_class(std::to_string(static_cast<unsigned long long>(c)))) << n;
  }
}

TEST(Lemma5Bound, Exact) {
  EXPECT_EQ(lemma5_bound(4), mpq_class(707281, 625));
  EXPECT_EQ(lemma5_bound(0), 1);
  EXPECT_TRUE(case1_bound_dominates(4, 8));
  EXPECT_TRUE(case1_bound_dominates(12, 24));
  EXPECT_FALSE(case1_bound_dominates(4, 32));
}

TEST(Theorem1Bound, Reports) {
  const BoundReport a = theorem1_bound(4, 2, 8);
  EXPECT_EQ(a.case_id, 1);
  EXPECT_EQ(a.lemma5_floor, 1131);
  EXPECT_EQ(a.theorem1_bound, 16);
  EXPECT_EQ(a.s_count, 60);
  EXPECT_EQ(a.flags, std::vector<std::string>{kFlagLemma8OutsideHypothesis});

  const BoundReport b = theorem1_bound(4, 8, 32);
  EXPECT_EQ(b.case_id, 2);
  EXPECT_EQ(b.theorem1_bound, 256);
  ASSERT_TRUE(b.lemma8.has_value());
  EXPECT_EQ(b.lemma8->count, 256);
  EXPECT_FALSE(b.has_flag(kFlagLemma8BelowBound));

  const BoundReport c = theorem1_bound(3, 9, 27);
  EXPECT_EQ(c.case_id, 2);
  EXPECT_EQ(c.theorem1_bound, 163);
  EXPECT_EQ(c.s_count, 2091);
  ASSERT_TRUE(c.lemma8.has_value());
  EXPECT_EQ(c.lemma8->count, 64);
  EXPECT_TRUE(c.has_flag(kFlagLemma8BelowBound));
  EXPECT_FALSE(c.has_flag(kFlagSCountBelowBound));
}

}  // namespace
}  // namespace binorder
