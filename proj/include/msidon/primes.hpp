#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "msidon/core.hpp"
#include "msidon/powers.hpp"

namespace msidon {

/// Nonnegative rational num/den, for interval endpoints such as x/m.
struct Ratio {
  u64 num;
  u64 den = 1;
  u64 floor() const { return num / den; }
};

/// Primality bitmap for the half-open range [lo, hi).
struct SieveSegment {
  u64 lo = 0;
  u64 hi = 0;
  std::vector<std::uint64_t> words;  // bit (v - lo) set iff v is prime

  bool is_prime(u64 v) const {
    const u64 off = v - lo;
    return (words[off >> 6] >> (off & 63)) & 1u;
  }
  std::vector<u64> primes() const;
};

/// Primes up to and including `limit` by the plain sieve of Eratosthenes.
std::vector<std::uint32_t> small_primes(u64 limit);

/// Sieves [lo, hi) using `base_primes`, which must contain every prime
/// p with p*p < hi.
SieveSegment sieve_segment(u64 lo, u64 hi, std::span<const std::uint32_t> base_primes);

struct SieveConfig {
  static constexpr u64 kDefaultCapacity = 100'000'000;
  static constexpr u64 kDefaultSegment = u64{1} << 22;

  u64 capacity = kDefaultCapacity;
  u64 segment_size = kDefaultSegment;
  unsigned threads = 0;  // 0: hardware concurrency

  /// Defaults overridden by SIDON_SIEVE_CAP when set.
  static SieveConfig from_env();
};

/// Segmented sieve over [0, limit] with O(1) prime counting.
/// Read-only after construction.
class PrimeTable {
 public:
  explicit PrimeTable(u64 limit, const SieveConfig& config = {});

  u64 limit() const noexcept { return limit_; }
  bool is_prime(u64 v) const;
  /// pi(x): number of primes <= x.
  u64 count(u64 x) const;
  u64 count(Ratio x) const { return count(x.floor()); }
  /// Primes p with lo < p <= hi.
  std::vector<u64> primes_in(u64 lo, u64 hi) const;
  std::vector<u64> primes_in(Ratio lo, Ratio hi) const { return primes_in(lo.floor(), hi.floor()); }
  /// Largest prime <= x, if any.
  std::optional<u64> prev_prime(u64 x) const;
  /// Smallest prime > x within the table, if any.
  std::optional<u64> next_prime_after(u64 x) const;

 private:
  void require(u64 x) const;
  bool bit(u64 v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }

  u64 limit_;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> prefix_;  // primes strictly below word w * 64
};

struct ShortIntervalScan {
  bool holds = true;
  std::optional<u64> first_failure;
  long double worst_margin = 0;  // min over x of x^e - (x - prevprime(x))
  u64 worst_x = 0;
  u64 x_min = 0, x_max = 0;
};

/// Checks that (x - x^e, x] holds a prime for every integer x in
/// [x_min, x_max], for an exponent 0 < e < 1.
ShortIntervalScan short_interval_scan(const PrimeTable& table, u64 x_min, u64 x_max,
                                      const Exponent& e);

/// short_interval_scan with the exponent 21/40.
ShortIntervalScan bhp_scan(const PrimeTable& table, u64 x_min, u64 x_max);

struct LmSumReport {
  u64 x = 0;
  Exponent alpha{0, 1}, beta{0, 1};
  double c0 = 0;
  u64 m_max = 0;       // floor(x^beta)
  u64 window_top = 0;  // x + floor(x^alpha)
  u64 total_count = 0;
  std::vector<std::pair<u64, u64>> per_m_counts;
  bool primes_distinct = false;
  bool multiplier_inequality_holds = false;  // m * x^alpha <= x for all m <= x^beta
  double lower_bound_c0xa = 0;               // c0 * x^alpha
};

/// sum over 1 <= m <= x^beta of pi((x + x^alpha)/m) - pi(x/m), with the
/// counted primes collected and checked for distinctness.
LmSumReport lm_sum(const PrimeTable& table, u64 x, const Exponent& alpha, const Exponent& beta,
                   double c0 = 0);

}  // namespace msidon
