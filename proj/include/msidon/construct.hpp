#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msidon/core.hpp"
#include "msidon/matching.hpp"
#include "msidon/powers.hpp"
#include "msidon/primes.hpp"
#include "msidon/sidon.hpp"

namespace msidon {

// ---------------------------------------------------------------------------
// Arithmetic-progression construction: {a <= n : a = 1 mod floor(sqrt n)}.
// ---------------------------------------------------------------------------

SidonSet elementary(u64 n);

struct AlgebraCounterexample {
  u64 i, j, k, l;
};

inline constexpr u64 kDefaultAlgebraMaxQ = 500;

/// Searches 0 <= i <= j <= q+1, 0 <= k <= l <= q+1 for
/// (1+qi)(1+qj) = (1+qk)(1+ql) with (i, j) != (k, l). For each (i, j, k) the
/// only possible l is solved for directly, so every quadruple is covered.
/// Throws BudgetError when q > max_q.
std::optional<AlgebraCounterexample> verify_theorem1_algebra(u64 q, u64 max_q = kDefaultAlgebraMaxQ);

// ---------------------------------------------------------------------------
// Exponent bookkeeping for the matching construction.
// ---------------------------------------------------------------------------

/// (13 - sqrt 69) / 10, the smaller root of 5a^2 - 13a + 5.
double rho() noexcept;

/// F(beta, delta) = 1 - alpha - (1 - alpha^2 - beta(2 - beta)) / delta.
double eta_value(double alpha, double beta, double delta) noexcept;

/// F at the corner beta = alpha, delta = (5 alpha - 2)/3; requires 2/5 < alpha < 1/2.
double sup_eta(double alpha);

/// Open window (3 alpha - 4/3, (5 alpha - 2)/3) of admissible delta.
std::pair<double, double> delta_window(double alpha) noexcept;

struct ExponentChoice {
  Exponent alpha{0, 1}, beta{0, 1}, delta{0, 1};
  double eta = 0;
  double c0 = 0;
};

/// alpha = rho + epsilon/2 (pulled back to the midpoint of (rho, 19/40) when
/// that would reach 19/40), then a 64x64 grid over the open (beta, delta) box
/// followed by 20 rounds of coordinate refinement. Exponents are rounded
/// inward to multiples of 1e-6 so they stay exact.
ExponentChoice choose_exponents(double epsilon);

/// A delta near the top of the window (where F is largest for any beta),
/// on the 1e-6 grid and strictly admissible.
Exponent best_delta(const Exponent& alpha);

struct ConstructionParams {
  u64 n = 0;
  Exponent alpha{0, 1}, beta{0, 1}, delta{0, 1};
  double eta = 0;
  double c0 = 0;  // eta / 2 when eta > 0, else 0
  u64 H = 0;      // ceil(2 n^alpha)
  u64 J = 0;      // floor(n^beta)
  u64 T = 0;      // floor(n / H)
  u64 t = 0;      // min(floor(H^(19/21)), T)
  u64 t_unclamped = 0;

  /// B_i = (iH, (i+1)H] for 1 <= i < T.
  u64 interval_lo(u64 i) const noexcept { return i * H; }
  u64 interval_hi(u64 i) const noexcept { return (i + 1) * H; }
};

/// Computes H, J, T, t with exact floor/ceil verification. Throws
/// DomainError on exponent constraint violations and when T < 2.
ConstructionParams derive_params(u64 n, const Exponent& alpha, const Exponent& beta,
                                 const Exponent& delta);

enum class IntervalMode { DirectPrime, Matched };

struct MatchingRecord {
  u64 i, m, p, a;
  IntervalMode mode;
};

struct MatchingCertificate {
  u64 J = 0;
  std::vector<MatchingRecord> records;

  PrivatePrimeCertificate as_private_prime() const;
};

struct RuntimeCheck {
  std::string name;
  bool holds;
  bool required;  // informational checks do not affect success
  std::string detail;
};

struct PhaseStats {
  u64 phase1_intervals = 0;
  u64 phase2_intervals = 0;
  u64 graph_right = 0;
  u64 graph_edges = 0;
  u64 max_phase1_collisions = 0;  // max over (i, m) of Phase-1 primes p with mp in B_i
  u64 matching_size = 0;
};

struct IntervalDeficiency {
  std::vector<u64> intervals;  // interval indices i of S
  std::vector<u64> primes;     // N(S)
};

struct ConstructionOutcome {
  bool success = false;
  std::string failure;
  std::optional<SidonSet> set;
  std::optional<MatchingCertificate> certificate;
  std::optional<GapReport> gap;
  std::vector<u64> prime_free_intervals;
  std::optional<IntervalDeficiency> deficiency;
  std::vector<RuntimeCheck> checks;
  PhaseStats stats;
  WeightedBipartiteGraph graph;  // Phase-2 interval/prime graph; left ids = i, right ids = p
};

/// Phase 1 gives each B_i with i < t its smallest prime (m = 1); Phase 2
/// matches the remaining intervals to primes p with mp in B_i,
/// m <= (iH)^beta, avoiding Phase-1 primes. Requires table.limit() >= n.
ConstructionOutcome matching_construct(const ConstructionParams& params, const PrimeTable& table);

}  // namespace msidon
