#include <gtest/gtest.h>

#include "msidon/core.hpp"
#include "oracles.hpp"

using namespace msidon;

TEST(GapMeasure, SmallExamples) {
  EXPECT_EQ(gap_measure(SidonSet(10, {1, 4, 7, 10})).measure, 3u);
  EXPECT_EQ(gap_measure(SidonSet(1, {1})).measure, 0u);
  const auto g = gap_measure(SidonSet(10, {2, 3, 5, 7}));
  EXPECT_EQ(g.leading_deficit, 1u);
  EXPECT_EQ(g.trailing_deficit, 3u);
  EXPECT_EQ(g.max_internal_gap, 2u);
  EXPECT_EQ(g.measure, 3u);
}

TEST(GapMeasure, WitnessWindowRealisesMeasure) {
  auto rng = oracle::rng(1);
  for (int rep = 0; rep < 500; ++rep) {
    const u64 n = 1 + rng() % 60;
    std::vector<u64> a;
    for (u64 v = 1; v <= n; ++v)
      if (rng() % 3 == 0) a.push_back(v);
    if (a.empty()) a.push_back(1 + rng() % n);
    const auto g = gap_measure(n, a);
    ASSERT_EQ(g.measure, oracle::gap(n, a));
    const auto [lo, hi] = g.witness_window;
    EXPECT_DOUBLE_EQ(hi - lo, static_cast<double>(g.measure));
    EXPECT_GE(lo, 1.0);
    EXPECT_LE(hi, static_cast<double>(n));
    // The open window misses the set.
    for (u64 x : a) EXPECT_FALSE(lo < x && x < hi) << "n=" << n;
  }
}

TEST(SidonSetType, NormalisesAndValidates) {
  const SidonSet s(10, {7, 1, 4, 7});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.front(), 1u);
  EXPECT_EQ(s.back(), 7u);
  EXPECT_THROW(SidonSet(0, {1}), DomainError);
  EXPECT_THROW(SidonSet(5, {6}), DomainError);
  EXPECT_THROW(SidonSet(5, {0}), DomainError);
  try {
    SidonSet(5, {});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "empty set has no finite gap measure");
  }
}

TEST(Isqrt, MatchesSquares) {
  for (u64 r = 0; r < 3000; ++r) {
    EXPECT_EQ(isqrt(r * r), r);
    if (r) EXPECT_EQ(isqrt(r * r - 1), r - 1);
  }
  EXPECT_EQ(isqrt(0xFFFFFFFFFFFFFFFFull), 0xFFFFFFFFull);
}
