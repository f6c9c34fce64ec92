#include "msidon/primes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

namespace msidon {

std::vector<u64> SieveSegment::primes() const {
  std::vector<u64> out;
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t bits = words[w]; bits; bits &= bits - 1) {
      out.push_back(lo + w * 64 + static_cast<u64>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<std::uint32_t> small_primes(u64 limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    out.push_back(static_cast<std::uint32_t>(p));
    for (u64 q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return out;
}

SieveSegment sieve_segment(u64 lo, u64 hi, std::span<const std::uint32_t> base_primes) {
  if (hi < lo) throw DomainError("segment bounds reversed");
  SieveSegment seg;
  seg.lo = lo;
  seg.hi = hi;
  const u64 len = hi - lo;
  seg.words.assign((len + 63) / 64, ~std::uint64_t{0});
  if (len % 64) seg.words.back() = (std::uint64_t{1} << (len % 64)) - 1;
  auto clear = [&](u64 v) { seg.words[(v - lo) >> 6] &= ~(std::uint64_t{1} << ((v - lo) & 63)); };
  for (u64 v = lo; v < std::min<u64>(hi, 2); ++v) clear(v);
  for (std::uint32_t p32 : base_primes) {
    const u64 p = p32;
    if (p * p >= hi) break;
    const u64 start = std::max(p * p, (lo + p - 1) / p * p);
    for (u64 v = start; v < hi; v += p) clear(v);
  }
  return seg;
}

SieveConfig SieveConfig::from_env() {
  SieveConfig c;
  if (const char* cap = std::getenv("SIDON_SIEVE_CAP")) {
    try {
      c.capacity = std::stoull(cap);
    } catch (const std::exception&) {
      throw DomainError(std::string("SIDON_SIEVE_CAP is not an integer: ") + cap);
    }
  }
  return c;
}

PrimeTable::PrimeTable(u64 limit, const SieveConfig& config) : limit_(limit) {
  if (limit > config.capacity)
    throw CapacityError("sieve limit " + std::to_string(limit) + " exceeds capacity " +
                        std::to_string(config.capacity));
  const u64 words = limit / 64 + 1;
  words_.assign(words, 0);
  const u64 end = words * 64;  // sieve [0, end); bits past limit are masked below
  const auto base = small_primes(isqrt(end) + 1);
  const u64 seg_len = std::max<u64>(64, config.segment_size / 64 * 64);
  const u64 nseg = (end + seg_len - 1) / seg_len;

  std::atomic<u64> next{0};
  auto worker = [&] {
    for (u64 s = next++; s < nseg; s = next++) {
      const u64 lo = s * seg_len;
      const u64 hi = std::min(end, lo + seg_len);
      auto seg = sieve_segment(lo, hi, base);
      std::copy(seg.words.begin(), seg.words.end(), words_.begin() + static_cast<std::ptrdiff_t>(lo / 64));
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<u64>(threads, nseg));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  if (const u64 tail = (limit + 1) % 64) words_.back() &= (std::uint64_t{1} << tail) - 1;
  else words_.back() = 0;

  prefix_.resize(words + 1);
  prefix_[0] = 0;
  for (u64 w = 0; w < words; ++w)
    prefix_[w + 1] = prefix_[w] + static_cast<std::uint32_t>(std::popcount(words_[w]));
}

void PrimeTable::require(u64 x) const {
  if (x > limit_)
    throw CapacityError("query " + std::to_string(x) + " beyond sieve limit " + std::to_string(limit_));
}

bool PrimeTable::is_prime(u64 v) const {
  require(v);
  return bit(v);
}

u64 PrimeTable::count(u64 x) const {
  require(x);
  const u64 w = x >> 6;
  const std::uint64_t mask = (x & 63) == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << ((x & 63) + 1)) - 1;
  return prefix_[w] + static_cast<u64>(std::popcount(words_[w] & mask));
}

std::vector<u64> PrimeTable::primes_in(u64 lo, u64 hi) const {
  std::vector<u64> out;
  if (hi <= lo) return out;
  require(hi);
  for (u64 v = lo + 1; v <= hi;) {
    const u64 w = v >> 6;
    std::uint64_t bits = words_[w] >> (v & 63);
    if (!bits) {
      v = (w + 1) * 64;
      continue;
    }
    v += static_cast<u64>(std::countr_zero(bits));
    if (v > hi) break;
    out.push_back(v++);
  }
  return out;
}

std::optional<u64> PrimeTable::prev_prime(u64 x) const {
  require(x);
  for (u64 w = x >> 6;; --w) {
    std::uint64_t bits = words_[w];
    if (w == x >> 6 && (x & 63) != 63) bits &= (std::uint64_t{1} << ((x & 63) + 1)) - 1;
    if (bits) return w * 64 + 63 - static_cast<u64>(std::countl_zero(bits));
    if (w == 0) return std::nullopt;
  }
}

std::optional<u64> PrimeTable::next_prime_after(u64 x) const {
  if (x >= limit_) return std::nullopt;
  for (u64 v = x + 1, w = v >> 6; w < words_.size(); ++w, v = w * 64) {
    const std::uint64_t bits = words_[w] >> (v & 63) << (v & 63);
    if (bits) return w * 64 + static_cast<u64>(std::countr_zero(bits));
  }
  return std::nullopt;
}

ShortIntervalScan short_interval_scan(const PrimeTable& table, u64 x_min, u64 x_max, const Exponent& e) {
  if (x_min < 2 || x_max < x_min) throw DomainError("scan range must satisfy 2 <= from <= to");
  if (e.num() == 0 || e.num() >= e.den()) throw DomainError("scan exponent must lie in (0, 1)");
  if (x_max > table.limit())
    throw CapacityError("scan end " + std::to_string(x_max) + " beyond sieve limit " +
                        std::to_string(table.limit()));

  ShortIntervalScan r;
  r.x_min = x_min;
  r.x_max = x_max;
  r.worst_margin = std::numeric_limits<long double>::infinity();

  // x - x^e contains a prime iff gap(x) = x - prevprime(x) < x^e.
  auto ok = [&](u64 x, u64 gap, long double margin) {
    if (std::fabs(margin) >= 1.0L) return margin > 0;
    return compare_pow(gap, x, e) < 0;
  };
  auto margin_at = [&](u64 x, u64 p) { return pow_ld(x, e) - static_cast<long double>(x - p); };

  // Within a run of x sharing the same previous prime p, the margin
  // x^e - (x - p) is strictly decreasing (e < 1), so the run's minimum sits
  // at its right end and failures form a suffix of the run.
  u64 x = x_min;
  while (x <= x_max) {
    const u64 p = *table.prev_prime(x);
    const auto np = table.next_prime_after(p);
    const u64 run_end = np ? std::min(x_max, *np - 1) : x_max;
    const long double m_end = margin_at(run_end, p);
    if (m_end < r.worst_margin) {
      r.worst_margin = m_end;
      r.worst_x = run_end;
    }
    if (!ok(run_end, run_end - p, m_end)) {
      r.holds = false;
      if (!r.first_failure) {
        u64 lo = x, hi = run_end;  // first failing x in [lo, hi]
        while (lo < hi) {
          const u64 mid = lo + (hi - lo) / 2;
          if (ok(mid, mid - p, margin_at(mid, p))) lo = mid + 1;
          else hi = mid;
        }
        r.first_failure = lo;
      }
    }
    x = run_end + 1;
  }
  return r;
}

ShortIntervalScan bhp_scan(const PrimeTable& table, u64 x_min, u64 x_max) {
  return short_interval_scan(table, x_min, x_max, Exponent(21, 40));
}

LmSumReport lm_sum(const PrimeTable& table, u64 x, const Exponent& alpha, const Exponent& beta, double c0) {
  const Exponent half(1, 2);
  if (x < 2) throw DomainError("lm-sum requires x >= 2");
  if (!(Exponent(0, 1) < beta && beta < alpha && alpha < half))
    throw DomainError("lm-sum requires 0 < beta < alpha < 1/2");

  LmSumReport r;
  r.x = x;
  r.alpha = alpha;
  r.beta = beta;
  r.c0 = c0;
  r.m_max = floor_pow(x, beta);
  r.window_top = x + floor_pow(x, alpha);
  if (r.window_top > table.limit())
    throw CapacityError("x + x^alpha = " + std::to_string(r.window_top) + " beyond sieve limit " +
                        std::to_string(table.limit()));

  // p*m in (x, x + x^alpha]  <=>  floor(x/m) < p <= floor((x + floor(x^alpha))/m).
  std::vector<u64> counted;
  for (u64 m = 1; m <= r.m_max; ++m) {
    const Ratio lo{x, m}, hi{r.window_top, m};
    const u64 c = table.count(hi) - table.count(lo);
    r.per_m_counts.emplace_back(m, c);
    r.total_count += c;
    auto ps = table.primes_in(lo, hi);
    counted.insert(counted.end(), ps.begin(), ps.end());
  }
  std::sort(counted.begin(), counted.end());
  r.primes_distinct = std::adjacent_find(counted.begin(), counted.end()) == counted.end() &&
                      counted.size() == r.total_count;
  r.multiplier_inequality_holds = compare_pow(x, x, alpha, r.m_max) >= 0;
  r.lower_bound_c0xa = static_cast<double>(static_cast<long double>(c0) * pow_ld(x, alpha));
  return r;
}

}  // namespace msidon
