#include "msidon/matching.hpp"

#include <algorithm>
#include <cfenv>
#include <deque>
#include <limits>
#include <string>

namespace msidon {

WeightedBipartiteGraph::WeightedBipartiteGraph(std::vector<std::int64_t> left_ids,
                                               std::vector<std::int64_t> right_ids)
    : left_ids_(std::move(left_ids)), right_ids_(std::move(right_ids)), incident_(left_ids_.size()) {}

std::size_t WeightedBipartiteGraph::add_edge(std::size_t u, std::size_t v, Rational w,
                                             std::vector<u64> multipliers) {
  if (u >= left_size() || v >= right_size()) throw DomainError("edge endpoint out of range");
  if (sgn(w) < 0) throw DomainError("edge weights must be nonnegative");
  for (std::size_t e : incident_[u])
    if (edges_[e].v == v) throw DomainError("duplicate edge");
  w.canonicalize();
  edges_.push_back({u, v, std::move(w), std::move(multipliers)});
  incident_[u].push_back(edges_.size() - 1);
  return edges_.size() - 1;
}

std::vector<std::size_t> WeightedBipartiteGraph::neighbours(std::size_t u) const {
  std::vector<std::size_t> out;
  out.reserve(incident_[u].size());
  for (std::size_t e : incident_[u]) out.push_back(edges_[e].v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> WeightedBipartiteGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(left_size());
  for (std::size_t u = 0; u < left_size(); ++u) adj[u] = neighbours(u);
  return adj;
}

std::size_t Matching::size() const {
  return static_cast<std::size_t>(
      std::count_if(left_to_right.begin(), left_to_right.end(), [](const auto& v) { return v.has_value(); }));
}

bool Matching::covers_left() const {
  return std::all_of(left_to_right.begin(), left_to_right.end(), [](const auto& v) { return v.has_value(); });
}

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const WeightedBipartiteGraph& g)
      : adj_(g.adjacency()), pair_u_(g.left_size(), kInf), pair_v_(g.right_size(), kInf),
        dist_(g.left_size()), it_(g.left_size()) {}

  Matching run() {
    while (bfs()) {
      std::fill(it_.begin(), it_.end(), 0);
      for (std::size_t u = 0; u < adj_.size(); ++u)
        if (pair_u_[u] == kInf) dfs(u);
    }
    Matching m;
    m.left_to_right.resize(pair_u_.size());
    m.right_to_left.resize(pair_v_.size());
    for (std::size_t u = 0; u < pair_u_.size(); ++u)
      if (pair_u_[u] != kInf) m.left_to_right[u] = pair_u_[u];
    for (std::size_t v = 0; v < pair_v_.size(); ++v)
      if (pair_v_[v] != kInf) m.right_to_left[v] = pair_v_[v];
    return m;
  }

 private:
  bool bfs() {
    std::deque<std::size_t> q;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      dist_[u] = pair_u_[u] == kInf ? 0 : kInf;
      if (dist_[u] == 0) q.push_back(u);
    }
    bool found = false;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = pair_v_[v];
        if (w == kInf) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push_back(w);
        }
      }
    }
    return found;
  }

  // Iterative layered DFS; it_ keeps each vertex's scan position so every
  // edge is tried at most once per phase.
  bool dfs(std::size_t root) {
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      if (it_[u] == adj_[u].size()) {
        dist_[u] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++it_[stack.back()];
        continue;
      }
      const std::size_t v = adj_[u][it_[u]];
      const std::size_t w = pair_v_[v];
      if (w == kInf) {
        for (std::size_t x : stack) {
          const std::size_t y = adj_[x][it_[x]];
          pair_u_[x] = y;
          pair_v_[y] = x;
        }
        return true;
      }
      if (dist_[w] == dist_[u] + 1) stack.push_back(w);
      else ++it_[u];
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> pair_u_, pair_v_, dist_, it_;
};

}  // namespace

Matching max_matching(const WeightedBipartiteGraph& g) { return HopcroftKarp(g).run(); }

std::optional<DeficiencyWitness> deficiency_witness(const WeightedBipartiteGraph& g, const Matching& m) {
  if (m.left_to_right.size() != g.left_size() || m.right_to_left.size() != g.right_size())
    throw DomainError("matching does not belong to this graph");
  if (m.covers_left()) return std::nullopt;
  const auto adj = g.adjacency();
  std::vector<bool> seen_l(g.left_size(), false), seen_r(g.right_size(), false);
  std::deque<std::size_t> q;
  for (std::size_t u = 0; u < g.left_size(); ++u) {
    if (!m.left_to_right[u]) {
      seen_l[u] = true;
      q.push_back(u);
    }
  }
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop_front();
    for (std::size_t v : adj[u]) {
      if (seen_r[v]) continue;
      seen_r[v] = true;
      if (!m.right_to_left[v]) throw DomainError("matching is not maximum: augmenting path exists");
      const std::size_t w = *m.right_to_left[v];
      if (!seen_l[w]) {
        seen_l[w] = true;
        q.push_back(w);
      }
    }
  }
  DeficiencyWitness d;
  for (std::size_t u = 0; u < seen_l.size(); ++u)
    if (seen_l[u]) d.S.push_back(u);
  for (std::size_t v = 0; v < seen_r.size(); ++v)
    if (seen_r[v]) d.neighbourhood.push_back(v);
  return d;
}

namespace {

void weighted_degrees(const WeightedBipartiteGraph& g, HallCheck& h) {
  h.row_sums.assign(g.left_size(), Rational(0));
  h.col_sums.assign(g.right_size(), Rational(0));
  for (const auto& e : g.edges()) {
    h.row_sums[e.u] += e.w;
    h.col_sums[e.v] += e.w;
  }
}

}  // namespace

HallCheck weighted_hall_check(const WeightedBipartiteGraph& g, const Rational& L0) {
  if (sgn(L0) <= 0) throw DomainError("L0 must be positive");
  HallCheck h;
  weighted_degrees(g, h);
  for (std::size_t u = 0; u < g.left_size(); ++u)
    if (h.row_sums[u] < L0) h.row_offenders.push_back(u);
  for (std::size_t v = 0; v < g.right_size(); ++v)
    if (h.col_sums[v] > L0) h.col_offenders.push_back(v);
  h.rows_ok = h.row_offenders.empty();
  h.cols_ok = h.col_offenders.empty();
  return h;
}

HallCheck weighted_hall_check_bounded(const WeightedBipartiteGraph& g, double lo, double hi) {
  if (!(lo > 0) || !(lo <= hi)) throw DomainError("L0 enclosure must satisfy 0 < lo <= hi");
  HallCheck h;
  weighted_degrees(g, h);
  const Rational qlo(lo), qhi(hi);  // exact conversions of the doubles
  for (std::size_t u = 0; u < g.left_size(); ++u)
    if (h.row_sums[u] < qhi) h.row_offenders.push_back(u);
  for (std::size_t v = 0; v < g.right_size(); ++v)
    if (h.col_sums[v] > qlo) h.col_offenders.push_back(v);
  h.rows_ok = h.row_offenders.empty();
  h.cols_ok = h.col_offenders.empty();
  return h;
}

Rational harmonic_exact(u64 n) {
  Rational s(0);
  for (u64 m = 1; m <= n; ++m) s += Rational(1, static_cast<unsigned long>(m));
  return s;
}

namespace {

double directed_sum(u64 n, int mode) {
  const int saved = std::fegetround();
  std::fesetround(mode);
  volatile double s = 0.0;
  for (u64 m = n; m >= 1; --m) {
    volatile double term = 1.0 / static_cast<double>(m);
    s = s + term;
  }
  std::fesetround(saved);
  return s;
}

}  // namespace

std::pair<double, double> harmonic_bounds(u64 n) {
  if (n > (u64{1} << 53)) throw DomainError("harmonic bound index too large");
  return {directed_sum(n, FE_DOWNWARD), directed_sum(n, FE_UPWARD)};
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw DomainError("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw DomainError("rational with zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace msidon
