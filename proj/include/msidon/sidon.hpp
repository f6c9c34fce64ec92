#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msidon/core.hpp"

namespace msidon {

inline constexpr u64 kDefaultProductBudget = 1'000'000'000;

/// Brute-force product-distinctness oracle. Returns the first collision in
/// lexicographic order of pairs (a, b), a <= b, or nullopt if every product
/// a*b is distinct. The input is normalized (sorted, deduped) first.
/// Throws BudgetError when |A|(|A|+1)/2 exceeds `budget`.
std::optional<ConflictWitness> find_product_conflict(std::span<const u64> elements,
                                                     u64 budget = kDefaultProductBudget);

inline bool is_multiplicative_sidon(std::span<const u64> elements, u64 budget = kDefaultProductBudget) {
  return !find_product_conflict(elements, budget).has_value();
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(u64 v) noexcept;

struct CertificateItem {
  u64 a, m, p;
  friend bool operator==(const CertificateItem&, const CertificateItem&) = default;
};

/// Each a = m*p with 1 <= m <= J < p, p prime, all p distinct.
struct PrivatePrimeCertificate {
  u64 J = 1;
  std::vector<CertificateItem> items;
};

enum class ViolationKind { BadJ, Factorization, MultiplierRange, PrimeNotAboveJ, NotPrime, DuplicatePrime };

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> items;  // offending item indices
  std::string message;
};

struct CertificateVerdict {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

CertificateVerdict check_certificate(const PrivatePrimeCertificate& cert);

const char* to_string(ViolationKind kind) noexcept;

}  // namespace msidon
