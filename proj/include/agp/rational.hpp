#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "agp/error.hpp"

namespace agp {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always held in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1. Equality is
/// therefore structural.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rat(const BigInt& value) : value_(value) {}
  Rat(const BigInt& numerator, const BigInt& denominator);
  Rat(long numerator, long denominator);

  /// Accepts "p/q", "p", with an optional sign on p. q must be positive.
  static Rat parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// True when this equals s*s for some rational s; `root` receives |s|.
  bool is_square(Rat* root = nullptr) const;

  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& lhs, const Rat& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

Rat abs(const Rat& x);

/// x^exponent; negative exponents invert. 0^0 = 1.
Rat pow(const Rat& base, std::int64_t exponent);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace agp
