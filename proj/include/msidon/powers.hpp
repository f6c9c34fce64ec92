#pragma once

#include <string>
#include <string_view>

#include "msidon/core.hpp"

namespace msidon {

/// A nonnegative rational exponent num/den, kept in lowest terms so that
/// real powers x^(num/den) can be compared exactly in integer arithmetic.
class Exponent {
 public:
  Exponent(u64 num, u64 den);

  /// Accepts "p/q", decimals ("0.47", ".45") and scientific ("4.7e-1").
  static Exponent parse(std::string_view text);
  /// Nearest multiple of 1/den at or below (resp. above) x.
  static Exponent round_down(double x, u64 den = 1'000'000);
  static Exponent round_up(double x, u64 den = 1'000'000);

  u64 num() const noexcept { return num_; }
  u64 den() const noexcept { return den_; }
  long double value() const noexcept { return static_cast<long double>(num_) / den_; }
  std::string str() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend bool operator<(const Exponent& a, const Exponent& b) {
    return static_cast<u128>(a.num_) * b.den_ < static_cast<u128>(b.num_) * a.den_;
  }

 private:
  u64 num_;
  u64 den_;
};

/// Sign of k - scale * x^e, decided exactly: k^den vs scale^den * x^num.
int compare_pow(u64 k, u64 x, const Exponent& e, u64 scale = 1);

/// floor(scale * x^e) and ceil(scale * x^e). Evaluated in long double and
/// rechecked exactly when the fractional part is within 1e-6 of an integer.
u64 floor_pow(u64 x, const Exponent& e, u64 scale = 1);
u64 ceil_pow(u64 x, const Exponent& e, u64 scale = 1);

long double pow_ld(u64 x, const Exponent& e);

}  // namespace msidon
