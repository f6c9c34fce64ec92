#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately naive.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline std::mt19937_64 rng(u64 salt = 0) {
  u64 seed = 20240611;
  if (const char* s = std::getenv("SIDON_SEED")) seed = std::strtoull(s, nullptr, 10);
  return std::mt19937_64(seed ^ (salt * 0x9E3779B97F4A7C15ULL));
}

inline bool is_prime(u64 v) {
  if (v < 2) return false;
  for (u64 d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

inline u64 pi(u64 x) {
  u64 c = 0;
  for (u64 v = 2; v <= x; ++v) c += is_prime(v);
  return c;
}

// All products a*b with a <= b distinct, by associative insertion.
inline bool is_sidon(const std::vector<u64>& a) {
  std::set<u64> seen;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      if (!seen.insert(a[i] * a[j]).second) return false;
  return true;
}

inline u64 gap(u64 n, std::vector<u64> a) {
  std::sort(a.begin(), a.end());
  u64 g = std::max(a.front() - 1, n - a.back());
  for (std::size_t i = 1; i < a.size(); ++i) g = std::max(g, a[i] - a[i - 1]);
  return g;
}

// Exhaustive over all Sidon subsets of [n]; only Sidon-ness is pruned.
inline void for_each_sidon_subset(u64 n, const std::function<void(const std::vector<u64>&)>& f) {
  std::vector<u64> cur;
  std::multiset<u64> prods;
  std::function<void(u64)> rec = [&](u64 v) {
    if (v > n) {
      if (!cur.empty()) f(cur);
      return;
    }
    rec(v + 1);
    std::vector<u64> added;
    bool ok = true;
    for (u64 x : cur) {
      if (prods.count(x * v)) ok = false;
      added.push_back(x * v);
    }
    added.push_back(v * v);
    if (prods.count(v * v)) ok = false;
    std::set<u64> uniq(added.begin(), added.end());
    if (uniq.size() != added.size()) ok = false;
    if (!ok) return;
    for (u64 p : added) prods.insert(p);
    cur.push_back(v);
    rec(v + 1);
    cur.pop_back();
    for (u64 p : added) prods.erase(prods.find(p));
  };
  rec(1);
}

inline u64 naive_g(u64 n) {
  u64 best = n;
  for_each_sidon_subset(n, [&](const std::vector<u64>& s) { best = std::min(best, gap(n, s)); });
  return best;
}

inline u64 naive_max_size(u64 n) {
  std::size_t best = 0;
  for_each_sidon_subset(n, [&](const std::vector<u64>& s) { best = std::max(best, s.size()); });
  return best;
}

// Kuhn's augmenting-path matching on adjacency lists.
inline std::size_t kuhn(const std::vector<std::vector<std::size_t>>& adj, std::size_t right) {
  std::vector<long> match(right, -1);
  std::size_t size = 0;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    std::vector<char> seen(right, 0);
    std::function<bool(std::size_t)> try_u = [&](std::size_t x) {
      for (std::size_t v : adj[x]) {
        if (seen[v]) continue;
        seen[v] = 1;
        if (match[v] < 0 || try_u(static_cast<std::size_t>(match[v]))) {
          match[v] = static_cast<long>(x);
          return true;
        }
      }
      return false;
    };
    size += try_u(u);
  }
  return size;
}

// Minimum vertex cover by brute force over left subsets: a left set X covers
// every edge not incident to X via N(L \ X).
inline std::size_t min_vertex_cover(const std::vector<std::vector<std::size_t>>& adj, std::size_t right) {
  const std::size_t L = adj.size();
  std::size_t best = L + right;
  for (u64 mask = 0; mask < (u64{1} << L); ++mask) {
    std::set<std::size_t> need;
    std::size_t x = 0;
    for (std::size_t u = 0; u < L; ++u) {
      if (mask >> u & 1) ++x;
      else need.insert(adj[u].begin(), adj[u].end());
    }
    best = std::min(best, x + need.size());
  }
  return best;
}

// |N(S)| < |S| recount straight from the adjacency lists.
inline bool is_hall_violator(const std::vector<std::vector<std::size_t>>& adj, const std::vector<std::size_t>& S,
                             const std::vector<std::size_t>& claimed_N) {
  std::set<std::size_t> N;
  for (std::size_t u : S) N.insert(adj[u].begin(), adj[u].end());
  return N.size() < S.size() && N == std::set<std::size_t>(claimed_N.begin(), claimed_N.end());
}

}  // namespace oracle
