#include "msidon/construct.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace msidon {

SidonSet elementary(u64 n) {
  if (n == 0) throw DomainError("n must be positive");
  const u64 q = isqrt(n);
  std::vector<u64> a;
  for (u64 v = 1; v <= n; v += q) a.push_back(v);
  return SidonSet(n, std::move(a));
}

std::optional<AlgebraCounterexample> verify_theorem1_algebra(u64 q, u64 max_q) {
  if (q == 0) throw DomainError("q must be positive");
  if (q > max_q)
    throw BudgetError("q = " + std::to_string(q) + " exceeds the configured bound " + std::to_string(max_q));
  const u64 top = q + 1;
  for (u64 i = 0; i <= top; ++i) {
    for (u64 j = i; j <= top; ++j) {
      const u64 prod = (1 + q * i) * (1 + q * j);
      for (u64 k = 0; k <= top; ++k) {
        const u64 d = 1 + q * k;
        if (prod % d) continue;
        const u64 r = prod / d;
        if ((r - 1) % q) continue;
        const u64 l = (r - 1) / q;
        if (l < k || l > top) continue;
        if (i != k || j != l) return AlgebraCounterexample{i, j, k, l};
      }
    }
  }
  return std::nullopt;
}

double rho() noexcept { return (13.0 - std::sqrt(69.0)) / 10.0; }

double eta_value(double alpha, double beta, double delta) noexcept {
  return 1.0 - alpha - (1.0 - alpha * alpha - beta * (2.0 - beta)) / delta;
}

double sup_eta(double alpha) {
  if (!(alpha > 0.4 && alpha < 0.5)) throw DomainError("sup_eta requires 2/5 < alpha < 1/2");
  return 1.0 - alpha - 3.0 * (1.0 - 2.0 * alpha) / (5.0 * alpha - 2.0);
}

std::pair<double, double> delta_window(double alpha) noexcept {
  return {3.0 * alpha - 4.0 / 3.0, (5.0 * alpha - 2.0) / 3.0};
}

namespace {

Rational as_q(const Exponent& e) {
  Rational r(static_cast<unsigned long>(e.num()), static_cast<unsigned long>(e.den()));
  r.canonicalize();
  return r;
}

// 0 < delta, 3 alpha - 4/3 < delta < (5 alpha - 2)/3, exactly.
bool delta_admissible(const Exponent& alpha, const Exponent& delta) {
  const Rational a = as_q(alpha), d = as_q(delta);
  return d > 0 && 3 * a - Rational(4, 3) < d && d < (5 * a - 2) / 3;
}

constexpr u64 kGridDen = 1'000'000;

}  // namespace

Exponent best_delta(const Exponent& alpha) {
  auto [lo, hi] = delta_window(static_cast<double>(alpha.value()));
  lo = std::max(lo, 0.0);
  if (!(lo < hi)) throw DomainError("empty delta window for alpha = " + alpha.str());
  // F increases in delta on the window: 1 - alpha^2 - beta(2 - beta) > 0 for beta < alpha < 1/2.
  Exponent d = Exponent::round_down(hi - (hi - lo) / 1024.0, kGridDen);
  while (!delta_admissible(alpha, d) && d.num() > 0) d = Exponent(d.num() * (kGridDen / d.den()) - 1, kGridDen);
  if (!delta_admissible(alpha, d)) throw DomainError("no admissible delta on the 1e-6 grid");
  return d;
}

ExponentChoice choose_exponents(double epsilon) {
  if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
  const double r = rho();
  double alpha = r + epsilon / 2.0;
  if (!(alpha < 19.0 / 40.0)) alpha = (r + 19.0 / 40.0) / 2.0;

  const auto [wlo, whi] = delta_window(alpha);
  const double dlo = std::max(wlo, 0.0), dhi = whi;
  if (!(dlo < dhi)) throw DomainError("infeasible: empty delta window");

  constexpr int kGrid = 64;
  double best_b = 0, best_d = 0, best = -INFINITY;
  for (int bi = 0; bi < kGrid; ++bi) {
    const double b = alpha * (bi + 1) / (kGrid + 1);
    for (int di = 0; di < kGrid; ++di) {
      const double d = dlo + (dhi - dlo) * (di + 1) / (kGrid + 1);
      const double f = eta_value(alpha, b, d);
      if (f > best) {
        best = f;
        best_b = b;
        best_d = d;
      }
    }
  }
  for (int step = 0; step < 20; ++step) {
    for (double cand : {best_b + (alpha - best_b) / 2, best_b / 2}) {
      if (const double f = eta_value(alpha, cand, best_d); f > best) {
        best = f;
        best_b = cand;
      }
    }
    for (double cand : {best_d + (dhi - best_d) / 2, best_d - (best_d - dlo) / 2}) {
      if (const double f = eta_value(alpha, best_b, cand); f > best) {
        best = f;
        best_d = cand;
      }
    }
  }

  ExponentChoice c;
  c.alpha = Exponent::round_down(alpha, kGridDen);
  if (!(alpha > r) || !(static_cast<double>(c.alpha.value()) > r))
    throw DomainError("infeasible: alpha does not exceed rho");
  c.beta = Exponent::round_down(best_b, kGridDen);
  if (!(c.beta < c.alpha)) c.beta = Exponent(c.alpha.num() * (kGridDen / c.alpha.den()) - 1, kGridDen);
  c.delta = Exponent::round_down(best_d, kGridDen);
  while (!delta_admissible(c.alpha, c.delta) && c.delta.num() > 0)
    c.delta = Exponent(c.delta.num() * (kGridDen / c.delta.den()) - 1, kGridDen);
  if (c.beta.num() == 0 || !delta_admissible(c.alpha, c.delta))
    throw DomainError("infeasible: rounding left the admissible region");
  c.eta = eta_value(static_cast<double>(c.alpha.value()), static_cast<double>(c.beta.value()),
                    static_cast<double>(c.delta.value()));
  if (!(c.eta > 0)) throw DomainError("infeasible: search found no eta > 0");
  c.c0 = c.eta / 2;
  return c;
}

ConstructionParams derive_params(u64 n, const Exponent& alpha, const Exponent& beta, const Exponent& delta) {
  if (n == 0 || n > kMaxN) throw DomainError("n out of range");
  if (!(Exponent(0, 1) < beta && beta < alpha && alpha < Exponent(1, 2)))
    throw DomainError("exponents must satisfy 0 < beta < alpha < 1/2");
  if (!delta_admissible(alpha, delta))
    throw DomainError("delta must satisfy 0 < delta and 3 alpha - 4/3 < delta < (5 alpha - 2)/3");

  ConstructionParams p;
  p.n = n;
  p.alpha = alpha;
  p.beta = beta;
  p.delta = delta;
  p.eta = eta_value(static_cast<double>(alpha.value()), static_cast<double>(beta.value()),
                    static_cast<double>(delta.value()));
  p.c0 = p.eta > 0 ? p.eta / 2 : 0;
  p.H = ceil_pow(n, alpha, 2);
  p.J = floor_pow(n, beta);
  p.T = n / p.H;
  if (p.T < 2) throw DomainError("degenerate size: T = floor(n/H) < 2, no intervals");
  p.t_unclamped = floor_pow(p.H, Exponent(19, 21));
  p.t = std::min(p.t_unclamped, p.T);
  return p;
}

PrivatePrimeCertificate MatchingCertificate::as_private_prime() const {
  PrivatePrimeCertificate c;
  c.J = J;
  for (const auto& r : records) c.items.push_back({r.a, r.m, r.p});
  return c;
}

namespace {

mpz_class zpow(u64 b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

}  // namespace

ConstructionOutcome matching_construct(const ConstructionParams& P, const PrimeTable& table) {
  if (table.limit() < P.n)
    throw CapacityError("sieve limit " + std::to_string(table.limit()) + " below n = " + std::to_string(P.n));
  if (P.H == 0 || P.T < 2) throw DomainError("invalid construction parameters");

  ConstructionOutcome out;
  auto check = [&](std::string name, bool holds, bool required, std::string detail = {}) {
    out.checks.push_back({std::move(name), holds, required, std::move(detail)});
    return holds;
  };

  const u64 H = P.H, J = P.J, T = P.T, t = P.t;

  check("H_is_ceil_2n_alpha",
        compare_pow(H, P.n, P.alpha, 2) >= 0 && compare_pow(H - 1, P.n, P.alpha, 2) < 0, true,
        "H - 1 < 2 n^alpha <= H");
  if (P.t_unclamped > 0) {
    const mpz_class h19 = zpow(H, 19);
    check("t_is_floor_H_19_21", zpow(P.t_unclamped, 21) <= h19 && h19 < zpow(P.t_unclamped + 1, 21), true,
          "t^21 <= H^19 < (t+1)^21");
  }
  check("J_below_H", J < H, true, "J = floor(n^beta) < H");
  // BHP applies to every Phase-1 interval: H >= ((i+1)H)^(21/40) for i < t.
  if (t >= 2) {
    check("phase1_interval_long_enough", zpow(H, 40) >= zpow(t * H, 21), true, "H^40 >= (tH)^21");
  }
  check("lm_window_inside_interval", compare_pow(H, P.n, P.alpha) > 0, true, "n^alpha < H");

  // Phase 1.
  std::vector<MatchingRecord> records;
  std::vector<u64> phase1_primes;
  for (u64 i = 1; i < t; ++i) {
    const auto p = table.next_prime_after(P.interval_lo(i));
    if (!p || *p > P.interval_hi(i)) {
      out.prime_free_intervals.push_back(i);
      continue;
    }
    records.push_back({i, 1, *p, *p, IntervalMode::DirectPrime});
    phase1_primes.push_back(*p);
  }
  out.stats.phase1_intervals = t > 0 ? t - 1 : 0;
  if (!out.prime_free_intervals.empty()) {
    out.failure = "phase 1: " + std::to_string(out.prime_free_intervals.size()) +
                  " prime-free interval(s), first B_" + std::to_string(out.prime_free_intervals.front());
    return out;
  }
  check("phase1_primes_above_J",
        std::all_of(phase1_primes.begin(), phase1_primes.end(), [&](u64 p) { return p > J; }), true);

  // Phase 2 graph: (i, p, m) with mp in B_i, m <= (iH)^beta, p not a Phase-1 prime.
  const u64 first2 = std::max<u64>(t, 1);
  out.stats.phase2_intervals = T > first2 ? T - first2 : 0;
  struct Incidence {
    u64 i, p, m;
  };
  std::vector<Incidence> inc;
  u64 max_collisions = 0, m_over_J = 0, p_not_above_J = 0;
  for (u64 i = first2; i < T; ++i) {
    const u64 lo = P.interval_lo(i), hi = P.interval_hi(i);
    const u64 m_max = floor_pow(lo, P.beta);
    if (m_max > J) ++m_over_J;
    for (u64 m = 1; m <= std::min(m_max, J); ++m) {
      u64 collisions = 0;
      for (u64 p : table.primes_in(Ratio{lo, m}, Ratio{hi, m})) {
        if (std::binary_search(phase1_primes.begin(), phase1_primes.end(), p)) {
          ++collisions;
          continue;
        }
        if (p <= J) {
          ++p_not_above_J;
          continue;
        }
        inc.push_back({i, p, m});
      }
      max_collisions = std::max(max_collisions, collisions);
    }
  }
  out.stats.max_phase1_collisions = max_collisions;
  check("phase1_collisions_at_most_two", max_collisions <= 2, true,
        "max over (i,m) of Phase-1 primes with mp in B_i = " + std::to_string(max_collisions));
  check("phase2_multipliers_within_J", m_over_J == 0, true, "floor((iH)^beta) <= J");
  check("phase2_primes_above_J", p_not_above_J == 0, true,
        std::to_string(p_not_above_J) + " candidate(s) with p <= J excluded");

  std::vector<u64> right;
  right.reserve(inc.size());
  for (const auto& x : inc) right.push_back(x.p);
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());
  std::vector<std::int64_t> left_ids, right_ids(right.begin(), right.end());
  for (u64 i = first2; i < T; ++i) left_ids.push_back(static_cast<std::int64_t>(i));
  out.graph = WeightedBipartiteGraph(left_ids, right_ids);

  std::map<std::pair<u64, u64>, std::vector<u64>> multipliers;  // (left, right) -> ms
  for (const auto& x : inc) {
    const u64 v = static_cast<u64>(std::lower_bound(right.begin(), right.end(), x.p) - right.begin());
    multipliers[{x.i - first2, v}].push_back(x.m);
  }
  bool col_ms_distinct = true;
  {
    std::map<u64, std::vector<u64>> by_col;
    for (const auto& [key, ms] : multipliers) {
      Rational w(0);
      for (u64 m : ms) w += Rational(1, static_cast<unsigned long>(m));
      out.graph.add_edge(key.first, key.second, w, ms);
      auto& col = by_col[key.second];
      col.insert(col.end(), ms.begin(), ms.end());
    }
    for (auto& [v, ms] : by_col) {
      std::sort(ms.begin(), ms.end());
      if (std::adjacent_find(ms.begin(), ms.end()) != ms.end()) col_ms_distinct = false;
    }
  }
  out.stats.graph_right = right.size();
  out.stats.graph_edges = out.graph.edges().size();
  check("column_multipliers_distinct", col_ms_distinct, true,
        "each m contributes to at most one interval per prime");

  if (out.graph.left_size() > 0) {
    const auto [hlo, hhi] = harmonic_bounds(P.n);
    const auto hall = weighted_hall_check_bounded(out.graph, hlo, hhi);
    check("weighted_hall_columns", hall.cols_ok, true,
          "column weighted degrees <= H_n (" + std::to_string(hall.col_offenders.size()) + " offenders)");
    check("weighted_hall_rows", hall.rows_ok, false,
          "row weighted degrees >= H_n (" + std::to_string(hall.row_offenders.size()) + " offenders)");
  }
  {
    // Final inequality chain of the proof, informational at desk scale.
    const double n = static_cast<double>(P.n);
    const double a = static_cast<double>(P.alpha.value()), b = static_cast<double>(P.beta.value());
    check("lm_bound_dominates_harmonic", P.c0 * std::pow(n, a * (a - b)) > 3 * std::log(3 * n), false,
          "c0 n^(alpha(alpha-beta)) > 3 log(3n)");
  }

  const Matching M = max_matching(out.graph);
  out.stats.matching_size = M.size();
  if (!M.covers_left()) {
    const auto d = deficiency_witness(out.graph, M);
    IntervalDeficiency def;
    for (std::size_t u : d->S) def.intervals.push_back(static_cast<u64>(out.graph.left_ids()[u]));
    for (std::size_t v : d->neighbourhood) def.primes.push_back(static_cast<u64>(out.graph.right_ids()[v]));
    out.failure = "phase 2: matching deficiency, |S| = " + std::to_string(def.intervals.size()) +
                  " > |N(S)| = " + std::to_string(def.primes.size());
    out.deficiency = std::move(def);
    return out;
  }
  for (std::size_t u = 0; u < out.graph.left_size(); ++u) {
    const std::size_t v = *M.left_to_right[u];
    const u64 i = first2 + u, p = right[v];
    const u64 m = multipliers.at({u, v}).front();  // smallest multiplier
    records.push_back({i, m, p, m * p, IntervalMode::Matched});
  }

  std::sort(records.begin(), records.end(), [](const auto& x, const auto& y) { return x.i < y.i; });
  MatchingCertificate cert;
  cert.J = J;
  cert.records = std::move(records);
  bool one_per_interval = cert.records.size() == T - 1;
  for (const auto& r : cert.records)
    one_per_interval = one_per_interval && r.a > P.interval_lo(r.i) && r.a <= P.interval_hi(r.i);
  check("one_element_per_interval", one_per_interval, true);

  const auto verdict = check_certificate(cert.as_private_prime());
  check("certificate_valid", verdict.ok(), true,
        verdict.ok() ? "" : verdict.violations.front().message);

  std::vector<u64> elems;
  for (const auto& r : cert.records) elems.push_back(r.a);
  SidonSet set(P.n, std::move(elems));
  const GapReport gap = gap_measure(set);
  check("gap_within_2H", gap.measure <= 2 * H, true,
        "gap " + std::to_string(gap.measure) + " vs 2H = " + std::to_string(2 * H));

  out.set = std::move(set);
  out.certificate = std::move(cert);
  out.gap = gap;
  out.success = std::all_of(out.checks.begin(), out.checks.end(), [](const auto& c) { return c.holds || !c.required; });
  if (!out.success) {
    for (const auto& c : out.checks)
      if (c.required && !c.holds) {
        out.failure = "runtime check failed: " + c.name;
        break;
      }
  }
  return out;
}

}  // namespace msidon
