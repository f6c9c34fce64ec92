#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msidon/core.hpp"

namespace msidon {

inline constexpr u64 kDefaultNodeBudget = 100'000'000;

struct ExactResult {
  u64 n = 0;
  u64 value = 0;        // g(n) or maximum size; the best found when not proven
  u64 lower_bound = 0;  // equals value for g(n) when proven_optimal
  SidonSet witness{1, {1}};
  u64 nodes_explored = 0;
  bool proven_optimal = false;
};

/// g(n) by binary search over L with a left-to-right DFS per candidate L.
ExactResult exact_g(u64 n, u64 budget = kDefaultNodeBudget);

/// Largest Sidon subset of [n] by branch and bound. For this problem
/// lower_bound is the size of the incumbent and value its proven optimum.
ExactResult max_sidon_size(u64 n, u64 budget = kDefaultNodeBudget);

enum class SearchStatus { Feasible, Infeasible, Exhausted };

struct GapSearch {
  SearchStatus status;
  std::vector<u64> witness;  // lexicographically least feasible set when Feasible
  u64 nodes = 0;
};

/// Does some Sidon A in [n] have gap measure <= L? Elements are chosen in
/// ascending order, first <= 1 + L, each within L of the previous, stopping once the
/// last reaches n - L.
GapSearch search_gap(u64 n, u64 L, u64 budget);

struct TableRow {
  ExactResult g;
  ExactResult max_size;
  u64 pi_n;
};

/// Rows n = 1..to, solved on `threads` workers (0: hardware concurrency).
std::vector<TableRow> exact_table(u64 to, u64 budget, unsigned threads = 0);

/// CSV with header n,g,witness,max_size,excess,log_n,proven.
std::string table_csv(const std::vector<TableRow>& rows);

}  // namespace msidon
