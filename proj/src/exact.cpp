#include "msidon/exact.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "msidon/construct.hpp"
#include "msidon/primes.hpp"

namespace msidon {

namespace {

// Products of the current partial set, with an undo log per chosen element.
// Dense bitmap when n^2 is small, hash set otherwise.
class ProductSet {
 public:
  explicit ProductSet(u64 n) : dense_(n <= 8192) {
    if (dense_) bits_.assign(n * n + 1, false);
  }

  bool contains(u64 p) const { return dense_ ? bits_[p] : sparse_.count(p) != 0; }

  /// Adds x against `chosen`; returns false (and leaves the state unchanged)
  /// if any product x*a (a in chosen, or a = x) already exists.
  bool try_add(u64 x, const std::vector<u64>& chosen) {
    if (contains(x * x)) return false;
    for (u64 a : chosen)
      if (contains(x * a)) return false;
    insert(x * x);
    for (u64 a : chosen) insert(x * a);
    return true;
  }

  void remove_last(u64 x, const std::vector<u64>& chosen_without_x) {
    erase(x * x);
    for (u64 a : chosen_without_x) erase(x * a);
  }

 private:
  void insert(u64 p) {
    if (dense_) bits_[p] = true;
    else sparse_.insert(p);
  }
  void erase(u64 p) {
    if (dense_) bits_[p] = false;
    else sparse_.erase(p);
  }

  bool dense_;
  std::vector<bool> bits_;
  std::unordered_set<u64> sparse_;
};

}  // namespace

GapSearch search_gap(u64 n, u64 L, u64 budget) {
  if (n == 0) throw DomainError("n must be positive");
  if (n > 65535) throw DomainError("exact search supports n <= 65535");
  GapSearch r{SearchStatus::Infeasible, {}, 0};
  ProductSet products(n);
  std::vector<u64> chosen;
  // next[d] is the next candidate to try at depth d.
  std::vector<u64> next{1};
  const u64 target = n > L ? n - L : 1;

  while (!next.empty()) {
    const std::size_t depth = next.size() - 1;
    const u64 prev = depth == 0 ? 0 : chosen[depth - 1];
    const u64 cap = std::min(n, depth == 0 ? 1 + L : prev + L);
    u64& cand = next.back();
    if (cand > cap) {
      next.pop_back();
      if (!chosen.empty()) {
        const u64 x = chosen.back();
        chosen.pop_back();
        products.remove_last(x, chosen);
      }
      continue;
    }
    const u64 x = cand++;
    if (++r.nodes > budget) {
      r.status = SearchStatus::Exhausted;
      return r;
    }
    if (!products.try_add(x, chosen)) continue;
    chosen.push_back(x);
    if (x >= target) {
      r.status = SearchStatus::Feasible;
      r.witness = chosen;
      return r;
    }
    next.push_back(x + 1);
  }
  return r;
}

ExactResult exact_g(u64 n, u64 budget) {
  if (n == 0) throw DomainError("n must be positive");
  ExactResult res;
  res.n = n;
  const SidonSet elem = elementary(n);
  u64 lo = 0, hi = gap_measure(elem).measure;
  std::optional<std::vector<u64>> best;
  u64 best_at = hi;
  bool exhausted = false;

  auto spend = [&](u64 L) {
    const u64 left = budget > res.nodes_explored ? budget - res.nodes_explored : 0;
    auto s = search_gap(n, L, left);
    res.nodes_explored += s.nodes;
    return s;
  };
  while (lo < hi) {
    const u64 mid = lo + (hi - lo) / 2;
    auto s = spend(mid);
    if (s.status == SearchStatus::Exhausted) {
      exhausted = true;
      break;
    }
    if (s.status == SearchStatus::Feasible) {
      hi = mid;
      best = std::move(s.witness);
      best_at = mid;
    } else {
      lo = mid + 1;
    }
  }
  // Witness for the final value comes from the DFS itself when possible.
  if (!exhausted && (!best || best_at != hi)) {
    auto s = spend(hi);
    if (s.status == SearchStatus::Feasible) best = std::move(s.witness);
    else exhausted = true;
  }
  res.value = hi;
  res.lower_bound = lo;
  res.proven_optimal = !exhausted;
  res.witness = best ? SidonSet(n, *best) : elem;
  if (gap_measure(res.witness).measure > res.value) res.witness = elem;
  return res;
}

namespace {

class MaxSizeSolver {
 public:
  MaxSizeSolver(u64 n, u64 budget) : n_(n), budget_(budget), products_(n) {
    // Incumbent: {1} together with the primes up to n.
    best_.push_back(1);
    for (u64 p : small_primes(n)) best_.push_back(p);
  }

  void run() { dfs(1); }

  u64 n_;
  u64 budget_;
  u64 nodes_ = 0;
  bool exhausted_ = false;
  std::vector<u64> best_;

 private:
  // Candidates >= from that are still compatible with the current products.
  u64 bound(u64 from) const {
    u64 free = 0;
    for (u64 y = from; y <= n_; ++y) {
      bool ok = !products_.contains(y * y);
      for (std::size_t k = 0; ok && k < chosen_.size(); ++k) ok = !products_.contains(y * chosen_[k]);
      free += ok;
    }
    return chosen_.size() + free;
  }

  // Include-first branching on v, then exclude.
  void dfs(u64 v) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (v > n_) {
      if (chosen_.size() > best_.size()) best_ = chosen_;
      return;
    }
    if (bound(v) <= best_.size()) return;
    if (products_.try_add(v, chosen_)) {
      chosen_.push_back(v);
      dfs(v + 1);
      chosen_.pop_back();
      products_.remove_last(v, chosen_);
    }
    if (chosen_.size() + (n_ - v) > best_.size()) dfs(v + 1);
  }

  ProductSet products_;
  std::vector<u64> chosen_;
};

}  // namespace

ExactResult max_sidon_size(u64 n, u64 budget) {
  if (n == 0) throw DomainError("n must be positive");
  if (n > 4096) throw DomainError("max-size search supports n <= 4096");
  MaxSizeSolver solver(n, budget);
  solver.run();
  ExactResult res;
  res.n = n;
  res.value = solver.best_.size();
  res.lower_bound = solver.best_.size();
  res.nodes_explored = std::min(solver.nodes_, budget);
  res.proven_optimal = !solver.exhausted_;
  res.witness = SidonSet(n, solver.best_);
  return res;
}

std::vector<TableRow> exact_table(u64 to, u64 budget, unsigned threads) {
  if (to == 0) throw DomainError("table bound must be positive");
  const auto primes = small_primes(to);
  std::vector<std::optional<TableRow>> rows(to);
  std::atomic<u64> next{1};
  auto worker = [&] {
    for (u64 n = next++; n <= to; n = next++) {
      const u64 pi = static_cast<u64>(std::upper_bound(primes.begin(), primes.end(), n) - primes.begin());
      rows[n - 1] = TableRow{exact_g(n, budget), max_sidon_size(n, budget), pi};
    }
  };
  unsigned k = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  k = static_cast<unsigned>(std::min<u64>(k, to));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < k; ++i) pool.emplace_back(worker);
    worker();
  }
  std::vector<TableRow> out;
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n,g,witness,max_size,excess,log_n,proven\n";
  for (const auto& r : rows) {
    os << r.g.n << ',' << r.g.value << ',';
    bool first = true;
    for (u64 a : r.g.witness.elements()) {
      os << (first ? "" : " ") << a;
      first = false;
    }
    const auto excess = static_cast<long long>(r.max_size.value) - static_cast<long long>(r.pi_n);
    char logbuf[32];
    std::snprintf(logbuf, sizeof logbuf, "%.6f", std::log(static_cast<double>(r.g.n)));
    os << ',' << r.max_size.value << ',' << excess << ',' << logbuf << ','
       << (r.g.proven_optimal && r.max_size.proven_optimal ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace msidon
