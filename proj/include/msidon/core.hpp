#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace msidon {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Largest ambient bound whose squares (and pairwise products) fit in u64.
inline constexpr u64 kMaxN = 0xFFFFFFFFull;

// Error categories. The CLI maps DomainError/CapacityError/BudgetError to
// exit code 2.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A nonempty strictly increasing set of integers in [1, n]. Construction
/// normalizes (sorts, dedupes) and validates the range; it does not certify
/// the product-distinctness property, see sidon.hpp for that.
class SidonSet {
 public:
  SidonSet(u64 n, std::vector<u64> elements);

  u64 n() const noexcept { return n_; }
  std::span<const u64> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  u64 front() const noexcept { return elements_.front(); }
  u64 back() const noexcept { return elements_.back(); }

  friend bool operator==(const SidonSet&, const SidonSet&) = default;

 private:
  u64 n_;
  std::vector<u64> elements_;
};

struct GapReport {
  u64 leading_deficit = 0;   // a_1 - 1
  u64 trailing_deficit = 0;  // n - a_k
  u64 max_internal_gap = 0;  // 0 for a singleton
  u64 measure = 0;
  // Window [x, x + measure] whose endpoints touch the elements (or the
  // boundary) that realize the measure; shrinking it by 1/2 on each side
  // gives a window of length measure - 1 that misses the set.
  std::pair<double, double> witness_window{1.0, 1.0};

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

/// a*b == c*d with (a, b) != (c, d), a <= b, c <= d.
struct ConflictWitness {
  u64 a, b, c, d;
  friend bool operator==(const ConflictWitness&, const ConflictWitness&) = default;
};

/// Least integer L such that every window [x, x+L] inside [1, n] meets A.
GapReport gap_measure(const SidonSet& set);

/// Unnormalized input; throws DomainError("empty set has no finite gap
/// measure") on an empty list.
GapReport gap_measure(u64 n, std::span<const u64> elements);

u64 isqrt(u64 n) noexcept;

}  // namespace msidon
