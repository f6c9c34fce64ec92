#include <gtest/gtest.h>

#include <cmath>

#include "msidon/construct.hpp"
#include "oracles.hpp"

using namespace msidon;

static std::vector<u64> elems(const SidonSet& s) { return {s.elements().begin(), s.elements().end()}; }

TEST(Elementary, Examples) {
  EXPECT_EQ(elems(elementary(10)), (std::vector<u64>{1, 4, 7, 10}));
  EXPECT_EQ(elems(elementary(1)), (std::vector<u64>{1}));
  const auto s = elementary(100);
  EXPECT_EQ(elems(s), (std::vector<u64>{1, 11, 21, 31, 41, 51, 61, 71, 81, 91}));
  EXPECT_EQ(gap_measure(s).measure, 10u);
  EXPECT_THROW(elementary(0), DomainError);
}

TEST(Elementary, SidonWithSmallGap) {
  for (u64 n = 1; n <= 400; ++n) {
    const auto a = elems(elementary(n));
    ASSERT_TRUE(oracle::is_sidon(a)) << n;
    ASSERT_LE(oracle::gap(n, a), isqrt(n)) << n;
  }
}

TEST(Algebra, NoCounterexamples) {
  for (u64 q : {1, 2, 3, 50}) EXPECT_FALSE(verify_theorem1_algebra(q)) << q;
  EXPECT_THROW(verify_theorem1_algebra(0), DomainError);
  EXPECT_THROW(verify_theorem1_algebra(600), BudgetError);
}

TEST(Exponents, RhoAndSupEta) {
  const double r = rho();
  EXPECT_NEAR(r, (13 - std::sqrt(69.0)) / 10, 1e-15);
  EXPECT_LT(std::fabs(5 * r * r - 13 * r + 5), 1e-12);
  EXPECT_NEAR(sup_eta(r), 0.0, 1e-12);
  EXPECT_NEAR(sup_eta(0.4743), 0.1106, 1e-4);
  EXPECT_LT(sup_eta(0.46), 0.0);
  const auto [lo, hi] = delta_window(0.47);
  EXPECT_NEAR(lo, 0.0767, 1e-4);
  EXPECT_NEAR(hi, 0.1167, 1e-4);
}

TEST(Exponents, ChooseFromEpsilon) {
  const auto c = choose_exponents(0.01);
  const double a = static_cast<double>(c.alpha.value()), b = static_cast<double>(c.beta.value()),
               d = static_cast<double>(c.delta.value());
  EXPECT_NEAR(a, 0.47434, 1e-5);
  EXPECT_GT(c.eta, 0.0);
  EXPECT_LT(std::fabs(c.eta - sup_eta(a)), 1e-3);
  EXPECT_DOUBLE_EQ(c.c0, c.eta / 2);
  EXPECT_GT(b, 0.0);
  EXPECT_LT(b, a);
  EXPECT_GT(d, 3 * a - 4.0 / 3);
  EXPECT_LT(d, (5 * a - 2) / 3);
  for (double eps : {1e-3, 0.003, 0.005, 0.2}) {
    const auto e = choose_exponents(eps);
    EXPECT_GT(e.eta, 0.0) << eps;
    EXPECT_LT(e.alpha.value(), 19.0L / 40) << eps;
  }
  EXPECT_THROW(choose_exponents(0.0), DomainError);
}

TEST(Params, DeskScale) {
  const auto p = derive_params(1'000'000, Exponent(47, 100), Exponent(9, 20), best_delta(Exponent(47, 100)));
  EXPECT_EQ(p.H, 1322u);
  EXPECT_EQ(p.J, 501u);
  EXPECT_EQ(p.T, 756u);
  // 1322^(19/21) = 666.76..., so the floor is 666.
  EXPECT_EQ(p.t, 666u);
  const auto q = derive_params(10'000, Exponent(47, 100), Exponent(9, 20), best_delta(Exponent(47, 100)));
  EXPECT_EQ(q.H, 152u);
  EXPECT_EQ(q.T, 65u);
  EXPECT_LE(q.t, q.T);
  EXPECT_THROW(derive_params(1000, Exponent(47, 100), Exponent(1, 2), best_delta(Exponent(47, 100))), DomainError);
}

TEST(Construction, MillionEndToEnd) {
  const auto P = derive_params(1'000'000, Exponent(47, 100), Exponent(9, 20), best_delta(Exponent(47, 100)));
  const PrimeTable table(P.n);
  const auto o = matching_construct(P, table);
  ASSERT_TRUE(o.success) << o.failure;
  ASSERT_TRUE(o.set && o.certificate && o.gap);
  EXPECT_EQ(o.set->size(), P.T - 1);
  for (const auto& r : o.certificate->records) {
    EXPECT_GT(r.a, P.interval_lo(r.i));
    EXPECT_LE(r.a, P.interval_hi(r.i));
  }
  EXPECT_TRUE(check_certificate(o.certificate->as_private_prime()).ok());
  EXPECT_LE(o.gap->measure, 2 * P.H);
  EXPECT_GT(o.stats.phase2_intervals, 0u);
  EXPECT_EQ(o.stats.matching_size, o.stats.phase2_intervals);
  EXPECT_TRUE(is_multiplicative_sidon(elems(*o.set)));
}

TEST(Construction, SmallNIsAllPhaseOne) {
  const auto alpha = Exponent(47, 100);
  const auto P = derive_params(10'000, alpha, Exponent(9, 20), best_delta(alpha));
  EXPECT_EQ(P.t, P.T);
  const auto o = matching_construct(P, PrimeTable(P.n));
  ASSERT_TRUE(o.success) << o.failure;
  EXPECT_EQ(o.stats.phase2_intervals, 0u);
  EXPECT_TRUE(oracle::is_sidon(elems(*o.set)));
}

TEST(Construction, SingleInterval) {
  const auto alpha = Exponent(47, 100);
  const auto P = derive_params(14, alpha, Exponent(9, 20), best_delta(alpha));
  EXPECT_EQ(P.T, 2u);
  const auto o = matching_construct(P, PrimeTable(P.n));
  ASSERT_TRUE(o.set);
  EXPECT_EQ(elems(*o.set), (std::vector<u64>{11}));
}

TEST(Construction, PrimeFreeIntervalYieldsDeficiency) {
  ConstructionParams P;
  P.n = 130;
  P.alpha = Exponent(47, 100);
  P.beta = Exponent(1, 100);
  P.delta = Exponent(1, 10);
  P.H = 6;
  P.J = 1;
  P.T = 21;
  P.t = P.t_unclamped = 2;
  const auto o = matching_construct(P, PrimeTable(200));
  EXPECT_FALSE(o.success);
  ASSERT_TRUE(o.deficiency);
  EXPECT_TRUE(o.deficiency->primes.empty());
  // (90, 96], (114, 120] and (120, 126] contain no primes.
  EXPECT_EQ(o.deficiency->intervals, (std::vector<u64>{15, 19, 20}));
}
