#include "msidon/core.hpp"

#include <algorithm>
#include <cmath>

namespace msidon {

SidonSet::SidonSet(u64 n, std::vector<u64> elements) : n_(n), elements_(std::move(elements)) {
  if (n_ == 0) throw DomainError("ambient bound n must be positive");
  if (n_ > kMaxN) throw DomainError("n too large: n^2 must fit in 64 bits");
  if (elements_.empty()) throw DomainError("empty set has no finite gap measure");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.front() < 1 || elements_.back() > n_)
    throw DomainError("set elements must lie in [1, n]");
}

GapReport gap_measure(const SidonSet& set) {
  const auto a = set.elements();
  GapReport r;
  r.leading_deficit = a.front() - 1;
  r.trailing_deficit = set.n() - a.back();
  u64 gap_lo = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] - a[i - 1] > r.max_internal_gap) {
      r.max_internal_gap = a[i] - a[i - 1];
      gap_lo = a[i - 1];
    }
  }
  r.measure = std::max({r.leading_deficit, r.trailing_deficit, r.max_internal_gap});

  // Ties resolve to the leftmost realizing window.
  double lo;
  if (r.measure == r.leading_deficit) {
    lo = 1.0;
  } else if (r.measure == r.max_internal_gap) {
    lo = static_cast<double>(gap_lo);
  } else {
    lo = static_cast<double>(a.back());
  }
  r.witness_window = {lo, lo + static_cast<double>(r.measure)};
  return r;
}

GapReport gap_measure(u64 n, std::span<const u64> elements) {
  if (elements.empty()) throw DomainError("empty set has no finite gap measure");
  return gap_measure(SidonSet(n, {elements.begin(), elements.end()}));
}

u64 isqrt(u64 n) noexcept {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace msidon
