#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "msidon/core.hpp"

namespace msidon {

using Rational = mpq_class;

struct WeightedEdge {
  std::size_t u;  // left index
  std::size_t v;  // right index
  Rational w;
  std::vector<u64> multipliers;  // contributing m values, when the weight is a sum of 1/m
};

/// Bipartite graph over left indices [0, |L|) and right indices [0, |R|),
/// each carrying an external integer id. Edges are unique and weights are
/// exact nonnegative rationals.
class WeightedBipartiteGraph {
 public:
  WeightedBipartiteGraph() = default;
  WeightedBipartiteGraph(std::vector<std::int64_t> left_ids, std::vector<std::int64_t> right_ids);

  std::size_t add_edge(std::size_t u, std::size_t v, Rational w = 1, std::vector<u64> multipliers = {});

  std::size_t left_size() const noexcept { return left_ids_.size(); }
  std::size_t right_size() const noexcept { return right_ids_.size(); }
  std::span<const std::int64_t> left_ids() const noexcept { return left_ids_; }
  std::span<const std::int64_t> right_ids() const noexcept { return right_ids_; }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  /// Right neighbours of u, ascending.
  std::vector<std::size_t> neighbours(std::size_t u) const;
  /// Adjacency for all left vertices, each list ascending.
  std::vector<std::vector<std::size_t>> adjacency() const;

 private:
  std::vector<std::int64_t> left_ids_, right_ids_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;  // edge indices per left vertex
};

struct Matching {
  std::vector<std::optional<std::size_t>> left_to_right;
  std::vector<std::optional<std::size_t>> right_to_left;

  std::size_t size() const;
  bool covers_left() const;
};

/// Hopcroft-Karp. Deterministic: roots, BFS layers and DFS augmentations are
/// taken in ascending index order.
Matching max_matching(const WeightedBipartiteGraph& g);

/// S subset of L with |N(S)| < |S|. Both sets ascending.
struct DeficiencyWitness {
  std::vector<std::size_t> S;
  std::vector<std::size_t> neighbourhood;
};

/// Alternating-path closure of the unmatched left vertices; nullopt when M
/// covers L. Throws DomainError if M admits an augmenting path.
std::optional<DeficiencyWitness> deficiency_witness(const WeightedBipartiteGraph& g, const Matching& m);

struct HallCheck {
  bool rows_ok = true;
  bool cols_ok = true;
  std::vector<std::size_t> row_offenders;  // left vertices with weighted degree < L0
  std::vector<std::size_t> col_offenders;  // right vertices with weighted degree > L0
  std::vector<Rational> row_sums, col_sums;
};

/// Row condition: every left weighted degree >= L0. Column condition: every
/// right weighted degree <= L0. Exact rational arithmetic throughout.
HallCheck weighted_hall_check(const WeightedBipartiteGraph& g, const Rational& L0);

/// Same check against an L0 known only to lie in [lo, hi]: rows must reach
/// hi and columns must stay within lo, so both verdicts hold for the true L0.
HallCheck weighted_hall_check_bounded(const WeightedBipartiteGraph& g, double lo, double hi);

/// Exact sum_{m=1}^{n} 1/m. Practical for n up to a few thousand.
Rational harmonic_exact(u64 n);

/// Enclosure [lo, hi] of sum_{m=1}^{n} 1/m by directed-rounding summation.
std::pair<double, double> harmonic_bounds(u64 n);

Rational parse_rational(const std::string& text);

}  // namespace msidon
