#include "msidon/powers.hpp"

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

namespace msidon {

namespace {

constexpr long double kBoundaryBand = 1e-6L;

mpz_class pow_z(u64 base, u64 exp) {
  mpz_class b;
  mpz_import(b.get_mpz_t(), 1, 1, sizeof(base), 0, 0, &base);
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

u64 checked_mul10(u64 v) {
  if (v > std::numeric_limits<u64>::max() / 10) throw DomainError("exponent has too many digits");
  return v * 10;
}

}  // namespace

Exponent::Exponent(u64 num, u64 den) : num_(num), den_(den) {
  if (den_ == 0) throw DomainError("exponent denominator must be positive");
  const u64 g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Exponent Exponent::parse(std::string_view text) {
  auto bad = [&] { return DomainError("malformed exponent: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto parse_u = [&](std::string_view s) {
      if (s.empty()) throw bad();
      u64 v = 0;
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        v = checked_mul10(v) + static_cast<u64>(c - '0');
      }
      return v;
    };
    return Exponent(parse_u(text.substr(0, slash)), parse_u(text.substr(slash + 1)));
  }
  u64 num = 0, den = 1;
  std::size_t i = 0;
  bool digits = false, point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.' && !point) {
      point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
      num = checked_mul10(num) + static_cast<u64>(c - '0');
      if (point) den = checked_mul10(den);
    } else {
      break;
    }
  }
  if (!digits) throw bad();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw bad();
    ++i;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    if (i == text.size()) throw bad();
    int e = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])) || e > 30) throw bad();
      e = e * 10 + (text[i] - '0');
    }
    for (int k = 0; k < e; ++k) {
      if (neg) den = checked_mul10(den);
      else num = checked_mul10(num);
    }
  }
  return Exponent(num, den);
}

Exponent Exponent::round_down(double x, u64 den) {
  if (!(x >= 0)) throw DomainError("exponent must be nonnegative");
  return Exponent(static_cast<u64>(std::floor(static_cast<long double>(x) * den)), den);
}

Exponent Exponent::round_up(double x, u64 den) {
  if (!(x >= 0)) throw DomainError("exponent must be nonnegative");
  return Exponent(static_cast<u64>(std::ceil(static_cast<long double>(x) * den)), den);
}

std::string Exponent::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

long double pow_ld(u64 x, const Exponent& e) {
  if (e.num() == 0) return 1.0L;
  return std::pow(static_cast<long double>(x), e.value());
}

int compare_pow(u64 k, u64 x, const Exponent& e, u64 scale) {
  // k - scale*x^e; both sides are nonnegative so raising to den preserves order.
  const mpz_class lhs = pow_z(k, e.den());
  const mpz_class rhs = pow_z(scale, e.den()) * pow_z(x, e.num());
  return cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

u64 floor_pow(u64 x, const Exponent& e, u64 scale) {
  const long double approx = static_cast<long double>(scale) * pow_ld(x, e);
  if (approx >= 1.8e19L) throw CapacityError("power exceeds 64-bit range");
  auto k = static_cast<u64>(std::floor(approx));
  const long double frac = approx - static_cast<long double>(k);
  if (frac < kBoundaryBand || frac > 1.0L - kBoundaryBand) {
    while (k > 0 && compare_pow(k, x, e, scale) > 0) --k;
    while (compare_pow(k + 1, x, e, scale) <= 0) ++k;
  }
  return k;
}

u64 ceil_pow(u64 x, const Exponent& e, u64 scale) {
  const long double approx = static_cast<long double>(scale) * pow_ld(x, e);
  if (approx >= 1.8e19L) throw CapacityError("power exceeds 64-bit range");
  auto k = static_cast<u64>(std::ceil(approx));
  const long double frac = static_cast<long double>(k) - approx;
  if (frac < kBoundaryBand || frac > 1.0L - kBoundaryBand) {
    while (compare_pow(k, x, e, scale) < 0) ++k;
    while (k > 0 && compare_pow(k - 1, x, e, scale) >= 0) --k;
  }
  return k;
}

}  // namespace msidon
