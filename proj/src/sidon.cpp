#include "msidon/sidon.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace msidon {

std::optional<ConflictWitness> find_product_conflict(std::span<const u64> elements, u64 budget) {
  if (elements.empty()) throw DomainError("Sidon check requires a nonempty set");
  std::vector<u64> a(elements.begin(), elements.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.front() == 0) throw DomainError("set elements must be positive");
  if (a.back() > kMaxN) throw DomainError("elements too large: products must fit in 64 bits");
  const u64 k = a.size();
  const u128 pairs = static_cast<u128>(k) * (k + 1) / 2;
  if (pairs > budget)
    throw BudgetError("product budget exceeded: " + std::to_string(static_cast<u64>(pairs)) +
                      " pairs > budget " + std::to_string(budget));

  // k-way merge over rows i, each row a_i*a_j (j >= i) strictly increasing.
  // Equal products pop in ascending row order, so the first pair popped in a
  // group is its lexicographic minimum and the second pair popped is the one
  // that collides first under lexicographic insertion.
  struct Head {
    u64 product;
    u64 i, j;
    bool operator>(const Head& o) const { return product != o.product ? product > o.product : i > o.i; }
  };
  std::priority_queue<Head, std::vector<Head>, std::greater<>> heap;
  for (u64 i = 0; i < k; ++i) heap.push({a[i] * a[i], i, i});

  std::optional<std::pair<u64, u64>> best_second;  // (i, j) of the earliest colliding pair
  std::pair<u64, u64> best_first{};
  u64 cur = 0;
  std::pair<u64, u64> group_first{};
  bool group_has_second = false;
  bool started = false;
  while (!heap.empty()) {
    Head h = heap.top();
    heap.pop();
    if (!started || h.product != cur) {
      cur = h.product;
      group_first = {h.i, h.j};
      group_has_second = false;
      started = true;
    } else if (!group_has_second) {
      group_has_second = true;
      const std::pair<u64, u64> second{h.i, h.j};
      if (!best_second || second < *best_second) {
        best_second = second;
        best_first = group_first;
      }
    }
    if (h.j + 1 < k) heap.push({a[h.i] * a[h.j + 1], h.i, h.j + 1});
  }
  if (!best_second) return std::nullopt;
  return ConflictWitness{a[best_first.first], a[best_first.second], a[best_second->first],
                         a[best_second->second]};
}

namespace {

u64 mul_mod(u64 x, u64 y, u64 m) { return static_cast<u64>(static_cast<u128>(x) * y % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  for (; e; e >>= 1) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 v) noexcept {
  if (v < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (v % p == 0) return v == p;
  }
  u64 d = v - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(base, d, v);
    if (x == 1 || x == v - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, v);
      if (x == v - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::BadJ: return "bad_J";
    case ViolationKind::Factorization: return "factorization";
    case ViolationKind::MultiplierRange: return "multiplier_range";
    case ViolationKind::PrimeNotAboveJ: return "prime_not_above_J";
    case ViolationKind::NotPrime: return "not_prime";
    case ViolationKind::DuplicatePrime: return "duplicate_prime";
  }
  return "unknown";
}

CertificateVerdict check_certificate(const PrivatePrimeCertificate& cert) {
  CertificateVerdict v;
  auto add = [&](ViolationKind k, std::vector<std::size_t> idx, std::string msg) {
    v.violations.push_back({k, std::move(idx), std::move(msg)});
  };
  auto item_str = [&](std::size_t i) {
    const auto& it = cert.items[i];
    return "item " + std::to_string(i) + " (a=" + std::to_string(it.a) + ", m=" + std::to_string(it.m) +
           ", p=" + std::to_string(it.p) + ")";
  };
  if (cert.J < 1) add(ViolationKind::BadJ, {}, "J must be at least 1");

  std::unordered_map<u64, std::vector<std::size_t>> by_prime;
  for (std::size_t i = 0; i < cert.items.size(); ++i) {
    const auto& it = cert.items[i];
    if (static_cast<u128>(it.m) * it.p != it.a) add(ViolationKind::Factorization, {i}, item_str(i) + ": a != m*p");
    if (it.m < 1 || it.m > cert.J)
      add(ViolationKind::MultiplierRange, {i}, item_str(i) + ": m outside [1, J=" + std::to_string(cert.J) + "]");
    if (it.p <= cert.J)
      add(ViolationKind::PrimeNotAboveJ, {i}, item_str(i) + ": p not > J=" + std::to_string(cert.J));
    if (!is_prime_u64(it.p)) add(ViolationKind::NotPrime, {i}, item_str(i) + ": p is not prime");
    by_prime[it.p].push_back(i);
  }
  std::vector<std::pair<u64, std::vector<std::size_t>>> dups;
  for (auto& [p, idx] : by_prime)
    if (idx.size() > 1) dups.emplace_back(p, idx);
  std::sort(dups.begin(), dups.end());
  for (auto& [p, idx] : dups) {
    std::string msg = "prime " + std::to_string(p) + " shared by items";
    for (auto i : idx) msg += " " + std::to_string(i);
    add(ViolationKind::DuplicatePrime, idx, msg);
  }
  return v;
}

}  // namespace msidon
