#include <gtest/gtest.h>

#include <cfenv>

#include "generators.hpp"
#include "msidon/matching.hpp"

using namespace msidon;

static WeightedBipartiteGraph small(std::initializer_list<std::pair<std::size_t, std::size_t>> edges,
                                    std::size_t left, std::size_t right) {
  WeightedBipartiteGraph g(gen::ids(left, 1), gen::ids(right, 1));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

TEST(Matching, Examples) {
  const auto perfect = small({{0, 0}, {1, 1}}, 2, 2);
  const auto m = max_matching(perfect);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(m.covers_left());
  EXPECT_FALSE(deficiency_witness(perfect, m));

  const auto star = small({{0, 0}, {1, 0}}, 2, 1);
  const auto ms = max_matching(star);
  EXPECT_EQ(ms.size(), 1u);
  const auto d = deficiency_witness(star, ms);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->S, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(d->neighbourhood, (std::vector<std::size_t>{0}));
}

TEST(Matching, GraphValidation) {
  WeightedBipartiteGraph g(gen::ids(2, 0), gen::ids(2, 0));
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(0, 1), DomainError);
  EXPECT_THROW(g.add_edge(2, 0), DomainError);
  EXPECT_THROW(g.add_edge(0, 0, Rational(-1)), DomainError);
}

TEST(Matching, AgreesWithKuhnOnRandomGraphs) {
  auto rng = oracle::rng(6);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t L = 1 + rng() % 50, R = 1 + rng() % 50;
    const unsigned density = 1 + rng() % 10;
    WeightedBipartiteGraph g(gen::ids(L, 0), gen::ids(R, 0));
    for (std::size_t u = 0; u < L; ++u)
      for (std::size_t v = 0; v < R; ++v)
        if (rng() % 40 < density) g.add_edge(u, v);
    const auto m = max_matching(g);
    const auto adj = gen::adjacency(g);
    ASSERT_EQ(m.size(), oracle::kuhn(adj, R));
    // Consistency of the two directions, and every pair is an edge.
    for (std::size_t u = 0; u < L; ++u)
      if (m.left_to_right[u]) {
        const auto v = *m.left_to_right[u];
        EXPECT_EQ(m.right_to_left[v], std::optional<std::size_t>(u));
        EXPECT_NE(std::find(adj[u].begin(), adj[u].end(), v), adj[u].end());
      }
    // Exactly one of: covering matching, valid deficiency witness.
    const auto d = deficiency_witness(g, m);
    EXPECT_NE(m.covers_left(), d.has_value());
    if (d) EXPECT_TRUE(oracle::is_hall_violator(adj, d->S, d->neighbourhood));
  }
}

TEST(Matching, KoenigOnSmallGraphs) {
  auto rng = oracle::rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t L = 1 + rng() % 10, R = 1 + rng() % 10;
    WeightedBipartiteGraph g(gen::ids(L, 0), gen::ids(R, 0));
    for (std::size_t u = 0; u < L; ++u)
      for (std::size_t v = 0; v < R; ++v)
        if (rng() % 4 == 0) g.add_edge(u, v);
    EXPECT_EQ(max_matching(g).size(), oracle::min_vertex_cover(gen::adjacency(g), R));
  }
}

TEST(WeightedHall, Examples) {
  WeightedBipartiteGraph one(gen::ids(1, 0), gen::ids(1, 0));
  one.add_edge(0, 0, Rational(1));
  auto h = weighted_hall_check(one, Rational(1));
  EXPECT_TRUE(h.rows_ok);
  EXPECT_TRUE(h.cols_ok);

  WeightedBipartiteGraph halves(gen::ids(1, 0), gen::ids(2, 0));
  halves.add_edge(0, 0, Rational(1, 2));
  halves.add_edge(0, 1, Rational(1, 2));
  h = weighted_hall_check(halves, Rational(1));
  EXPECT_TRUE(h.rows_ok);
  EXPECT_TRUE(h.cols_ok);
  EXPECT_EQ(h.row_sums[0], Rational(1));

  h = weighted_hall_check(halves, Rational(2));
  EXPECT_FALSE(h.rows_ok);
  EXPECT_EQ(h.row_offenders, (std::vector<std::size_t>{0}));
}

TEST(WeightedHall, ConditionsImplyCoveringMatching) {
  auto rng = oracle::rng(8);
  for (int rep = 0; rep < 200; ++rep) {
    const Rational L0(1 + rng() % 5, 1 + rng() % 3);
    const auto g = gen::weighted_hall_graph(rng, 1 + rng() % 40, L0);
    const auto h = weighted_hall_check(g, L0);
    ASSERT_TRUE(h.rows_ok && h.cols_ok);
    EXPECT_TRUE(max_matching(g).covers_left());
  }
}

TEST(WeightedHall, PlantedDeficiencyFound) {
  auto rng = oracle::rng(9);
  for (int rep = 0; rep < 200; ++rep) {
    const auto p = gen::planted_deficiency(rng, 1 + rng() % 40, 1 + rng() % 40);
    const auto m = max_matching(p.g);
    ASSERT_FALSE(m.covers_left());
    const auto d = deficiency_witness(p.g, m);
    ASSERT_TRUE(d);
    EXPECT_TRUE(oracle::is_hall_violator(gen::adjacency(p.g), d->S, d->neighbourhood));
  }
}

TEST(Harmonic, ExactAndDirectedBounds) {
  EXPECT_EQ(harmonic_exact(4), Rational(25, 12));
  for (u64 n : {1, 7, 100, 1000}) {
    const auto [lo, hi] = harmonic_bounds(n);
    const Rational exact = harmonic_exact(n);
    EXPECT_LE(Rational(lo), exact);
    EXPECT_GE(Rational(hi), exact);
    EXPECT_LT(hi - lo, 1e-9);
  }
  EXPECT_EQ(std::fegetround(), FE_TONEAREST);
}

TEST(Rationals, Parse) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
}
