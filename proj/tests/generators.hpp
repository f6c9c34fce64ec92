#pragma once

// Random graph and certificate generators shared by the unit and
// acceptance tests. All randomness flows from oracle::rng (SIDON_SEED).

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "msidon/matching.hpp"
#include "msidon/sidon.hpp"
#include "oracles.hpp"

namespace gen {

using msidon::Rational;
using msidon::u64;
using msidon::WeightedBipartiteGraph;

inline std::vector<std::int64_t> ids(std::size_t k, std::int64_t base) {
  std::vector<std::int64_t> v(k);
  std::iota(v.begin(), v.end(), base);
  return v;
}

inline std::vector<std::vector<std::size_t>> adjacency(const WeightedBipartiteGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.left_size());
  for (const auto& e : g.edges()) adj[e.u].push_back(e.v);
  return adj;
}

// Every row sums to exactly L0 and every column to at most L0, with pieces
// of the form L0/k.
inline WeightedBipartiteGraph weighted_hall_graph(std::mt19937_64& rng, std::size_t left, const Rational& L0) {
  for (;;) {
    const std::size_t right = left + rng() % (left + 1);
    WeightedBipartiteGraph g(ids(left, 0), ids(right, 1000));
    std::vector<Rational> cap(right, L0);
    bool ok = true;
    for (std::size_t u = 0; u < left && ok; ++u) {
      Rational need = L0;
      std::set<std::size_t> used;
      for (int tries = 0; need > 0 && tries < 200; ++tries) {
        const std::size_t v = rng() % right;
        if (used.count(v) || cap[v] == 0) continue;
        Rational piece = L0 / Rational(1 + rng() % 4);
        piece = std::min({piece, need, cap[v]});
        g.add_edge(u, v, piece);
        used.insert(v);
        need -= piece;
        cap[v] -= piece;
      }
      ok = need == 0;
    }
    if (ok) return g;
  }
}

struct Planted {
  WeightedBipartiteGraph g;
  std::vector<std::size_t> S;  // left vertices confined to too few right vertices
};

inline Planted planted_deficiency(std::mt19937_64& rng, std::size_t left, std::size_t right) {
  std::vector<std::size_t> L(left), R(right);
  std::iota(L.begin(), L.end(), 0);
  std::iota(R.begin(), R.end(), 0);
  std::shuffle(L.begin(), L.end(), rng);
  std::shuffle(R.begin(), R.end(), rng);
  const std::size_t s = 1 + rng() % std::min(left, right + 1);
  const std::size_t k = rng() % s;  // |N(S)| = k < s
  std::vector<std::size_t> S(L.begin(), L.begin() + s), N(R.begin(), R.begin() + k);
  std::set<std::size_t> inS(S.begin(), S.end());
  Planted out{WeightedBipartiteGraph(ids(left, 0), ids(right, 1000)), S};
  for (std::size_t u = 0; u < left; ++u) {
    if (inS.count(u)) {
      for (std::size_t v : N)
        if (rng() % 3 != 0) out.g.add_edge(u, v);
    } else {
      for (std::size_t v = 0; v < right; ++v)
        if (rng() % 4 == 0) out.g.add_edge(u, v);
    }
  }
  return out;
}

inline msidon::PrivatePrimeCertificate valid_certificate(std::mt19937_64& rng, std::size_t items) {
  const u64 J = 1 + rng() % 30;
  msidon::PrivatePrimeCertificate c{J, {}};
  std::set<u64> used;
  while (c.items.size() < items) {
    const u64 p = J + 1 + rng() % 5000;
    if (!oracle::is_prime(p) || !used.insert(p).second) continue;
    const u64 m = 1 + rng() % J;
    c.items.push_back({m * p, m, p});
  }
  return c;
}

// Breaks one condition of a valid certificate.
inline msidon::PrivatePrimeCertificate mutate(std::mt19937_64& rng, msidon::PrivatePrimeCertificate c) {
  auto& it = c.items[rng() % c.items.size()];
  switch (rng() % 5) {
    case 0:  // multiplier above J
      it.m = c.J + 1 + rng() % 5;
      it.a = it.m * it.p;
      break;
    case 1:  // prime not above J
      c.J = it.p;
      break;
    case 2: {  // composite "prime"
      u64 q = it.p * 2;
      it.p = q;
      it.a = it.m * q;
      break;
    }
    case 3:  // a != m p
      it.a += 1 + rng() % 3;
      break;
    default: {  // duplicate prime
      if (c.items.size() < 2) {
        it.a += 1;
        break;
      }
      auto& other = c.items[(&it - c.items.data() + 1) % c.items.size()];
      other.p = it.p;
      other.a = other.m * other.p;
      break;
    }
  }
  return c;
}

}  // namespace gen
