#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "agp/rational.hpp"

namespace agp {

/// Element p + q*s of Q[s]/(s^2 - D) for a fixed rational radicand D.
///
/// The representation stays formal for every D: negative radicands model
/// complex-conjugate pairs, and a rational-square D gives a ring with zero
/// divisors in which the usual identities still hold symbolically. Values
/// over different radicands never mix; such an operation raises a context
/// error.
class Quad {
 public:
  Quad() = default;
  Quad(Rat rational_part, Rat radical_part, Rat radicand)
      : p_(std::move(rational_part)), q_(std::move(radical_part)), d_(std::move(radicand)) {}

  /// Pure rational embedded over `radicand`.
  static Quad from_rat(Rat value, Rat radicand) {
    return Quad(std::move(value), Rat(0), std::move(radicand));
  }
  /// The generator s itself (so s*s == radicand).
  static Quad root(Rat radicand) { return Quad(Rat(0), Rat(1), std::move(radicand)); }

  /// Parses "p + q*sqrt(D)". A bare rational "p" is accepted as p + 0*sqrt(D)
  /// over `default_radicand`.
  static Quad parse(std::string_view text, const Rat& default_radicand = Rat(0));

  const Rat& rational_part() const { return p_; }
  const Rat& radical_part() const { return q_; }
  const Rat& radicand() const { return d_; }

  Quad conjugate() const { return Quad(p_, -q_, d_); }
  /// x * conjugate(x) = p^2 - q^2 D.
  Rat norm() const { return p_ * p_ - q_ * q_ * d_; }

  /// Zero as a number rather than as a formal pair: for a square radicand
  /// p + q*sqrt(D) may vanish with q != 0.
  bool value_is_zero() const;

  /// p + q*sqrt(D) in floating point.
  double to_double() const;

  /// Exact "p + q*sqrt(D)" rendering with Rat-form components.
  std::string to_string() const;
  /// Human rendering with square factors pulled out of the radicand, e.g.
  /// 3 + 1/2*sqrt(32) -> "3 + 2*sqrt(2)". Not parseable back to the same
  /// radicand.
  std::string to_pretty_string() const;

  Quad operator-() const { return Quad(-p_, -q_, d_); }
  Quad& operator+=(const Quad& rhs);
  Quad& operator-=(const Quad& rhs);
  Quad& operator*=(const Quad& rhs);
  Quad& operator/=(const Quad& rhs);
  Quad& operator*=(const Rat& rhs);

  friend Quad operator+(Quad lhs, const Quad& rhs) { return lhs += rhs; }
  friend Quad operator-(Quad lhs, const Quad& rhs) { return lhs -= rhs; }
  friend Quad operator*(Quad lhs, const Quad& rhs) { return lhs *= rhs; }
  friend Quad operator/(Quad lhs, const Quad& rhs) { return lhs /= rhs; }
  friend Quad operator*(Quad lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Quad operator*(const Rat& lhs, Quad rhs) { return rhs *= lhs; }

  friend bool operator==(const Quad&, const Quad&) = default;

 private:
  Rat p_;
  Rat q_;
  Rat d_;
};

Quad quad_mul(const Quad& x, const Quad& y);

/// Binary exponentiation; quad_pow(x, 0) = 1 + 0*s for every x.
Quad quad_pow(const Quad& x, std::uint64_t n);

/// The rational value of x. Succeeds when the radical part is zero or the
/// radicand is a rational square; otherwise raises an extraction error.
Rat quad_extract_rat(const Quad& x);

std::ostream& operator<<(std::ostream& os, const Quad& x);

}  // namespace agp
