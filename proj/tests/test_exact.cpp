#include <gtest/gtest.h>

#include "msidon/construct.hpp"
#include "msidon/exact.hpp"
#include "oracles.hpp"

using namespace msidon;

static std::vector<u64> elems(const SidonSet& s) { return {s.elements().begin(), s.elements().end()}; }

TEST(ExactG, SmallValues) {
  const auto one = exact_g(1);
  EXPECT_EQ(one.value, 0u);
  EXPECT_EQ(elems(one.witness), (std::vector<u64>{1}));
  for (u64 n : {2, 3, 4}) EXPECT_EQ(exact_g(n).value, 1u) << n;
  EXPECT_THROW(exact_g(0), DomainError);
}

TEST(ExactG, MatchesNaiveEnumeration) {
  for (u64 n = 1; n <= 16; ++n) {
    const auto r = exact_g(n);
    ASSERT_TRUE(r.proven_optimal);
    EXPECT_EQ(r.value, oracle::naive_g(n)) << n;
    const auto w = elems(r.witness);
    EXPECT_TRUE(oracle::is_sidon(w));
    EXPECT_EQ(oracle::gap(n, w), r.value);
    if (n >= 2) EXPECT_GE(r.value, 1u);
    EXPECT_LE(r.value, gap_measure(elementary(n)).measure);
  }
}

TEST(ExactG, DeterministicWitness) {
  EXPECT_EQ(elems(exact_g(25).witness), elems(exact_g(25).witness));
}

TEST(ExactG, BudgetExhaustion) {
  const auto r = exact_g(60, 5);
  EXPECT_FALSE(r.proven_optimal);
  EXPECT_LE(r.lower_bound, r.value);
  EXPECT_TRUE(oracle::is_sidon(elems(r.witness)));
  EXPECT_LE(gap_measure(r.witness).measure, r.value);
}

TEST(MaxSize, MatchesNaiveEnumeration) {
  EXPECT_EQ(max_sidon_size(1).value, 1u);
  for (u64 n = 1; n <= 18; ++n) {
    const auto r = max_sidon_size(n);
    ASSERT_TRUE(r.proven_optimal);
    EXPECT_EQ(r.value, oracle::naive_max_size(n)) << n;
    EXPECT_EQ(r.witness.size(), r.value);
    EXPECT_TRUE(oracle::is_sidon(elems(r.witness)));
  }
}

TEST(Table, CsvShape) {
  const auto rows = exact_table(6, kDefaultNodeBudget, 2);
  ASSERT_EQ(rows.size(), 6u);
  const std::string csv = table_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,g,witness,max_size,excess,log_n,proven");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
  EXPECT_EQ(rows[3].pi_n, 2u);
}
