#include "agp/quad.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace agp {

namespace {

void require_same_field(const Quad& x, const Quad& y) {
  if (x.radicand() != y.radicand()) {
    throw Error(ErrorKind::context, "quadratic values over different radicands: " +
                                        x.radicand().to_string() + " vs " +
                                        y.radicand().to_string());
  }
}

// Largest k with k^2 | m, by trial division; m > 0.
BigInt square_part(BigInt& m) {
  BigInt out = 1;
  for (unsigned long f = 2; f <= 100000 && BigInt(f) * f <= m; ++f) {
    const BigInt f2 = BigInt(f) * f;
    while (mpz_divisible_p(m.get_mpz_t(), f2.get_mpz_t())) {
      m /= f2;
      out *= f;
    }
  }
  return out;
}

}  // namespace

Quad& Quad::operator+=(const Quad& rhs) {
  require_same_field(*this, rhs);
  p_ += rhs.p_;
  q_ += rhs.q_;
  return *this;
}

Quad& Quad::operator-=(const Quad& rhs) {
  require_same_field(*this, rhs);
  p_ -= rhs.p_;
  q_ -= rhs.q_;
  return *this;
}

Quad& Quad::operator*=(const Quad& rhs) {
  require_same_field(*this, rhs);
  Rat p = p_ * rhs.p_ + q_ * rhs.q_ * d_;
  Rat q = p_ * rhs.q_ + rhs.p_ * q_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

Quad& Quad::operator*=(const Rat& rhs) {
  p_ *= rhs;
  q_ *= rhs;
  return *this;
}

Quad& Quad::operator/=(const Quad& rhs) {
  require_same_field(*this, rhs);
  const Rat n = rhs.norm();
  if (n.is_zero()) {
    throw Error(ErrorKind::arithmetic, "division by a quadratic value of zero norm: " +
                                           rhs.to_string());
  }
  *this *= rhs.conjugate();
  p_ /= n;
  q_ /= n;
  return *this;
}

bool Quad::value_is_zero() const {
  if (q_.is_zero()) return p_.is_zero();
  Rat s;
  if (!d_.is_square(&s)) return false;
  return (p_ + q_ * s).is_zero();
}

double Quad::to_double() const {
  if (q_.is_zero()) return p_.to_double();
  if (d_.sign() < 0) return std::nan("");
  const long double root = std::sqrt(static_cast<long double>(d_.to_double()));
  return static_cast<double>(static_cast<long double>(p_.to_double()) +
                             static_cast<long double>(q_.to_double()) * root);
}

std::string Quad::to_string() const {
  return p_.to_string() + " + " + q_.to_string() + "*sqrt(" + d_.to_string() + ")";
}

std::string Quad::to_pretty_string() const {
  if (q_.is_zero() || d_.is_zero()) return p_.to_string();
  // sqrt(n/d) = sqrt(n*d)/d, then pull k^2 out of n*d.
  BigInt inner = abs(d_.numerator() * d_.denominator());
  const BigInt k = square_part(inner);
  const Rat coeff = abs(q_) * Rat(k, d_.denominator());
  std::string radical = inner == 1 ? std::string() : "sqrt(" + inner.get_str() + ")";
  if (d_.sign() < 0) radical = inner == 1 ? "i" : "i*" + radical;
  std::string term;
  if (coeff == Rat(1)) {
    term = radical;
  } else {
    term = coeff.to_string() + (radical.empty() ? "" : "*" + radical);
  }
  const char* op = q_.sign() < 0 ? " - " : " + ";
  if (p_.is_zero()) return (q_.sign() < 0 ? "-" : "") + term;
  return p_.to_string() + op + term;
}

Quad Quad::parse(std::string_view text, const Rat& default_radicand) {
  const std::string s(text);
  const auto plus = s.find(" + ");
  if (plus == std::string::npos) {
    return Quad::from_rat(Rat::parse(s), default_radicand);
  }
  const std::string head = s.substr(0, plus);
  const std::string tail = s.substr(plus + 3);
  const auto star = tail.find("*sqrt(");
  if (star == std::string::npos || tail.empty() || tail.back() != ')') {
    throw Error(ErrorKind::parse, "not a quadratic value: '" + s + "'");
  }
  const std::string coeff = tail.substr(0, star);
  const std::string radicand = tail.substr(star + 6, tail.size() - star - 7);
  return Quad(Rat::parse(head), Rat::parse(coeff), Rat::parse(radicand));
}

Quad quad_mul(const Quad& x, const Quad& y) { return x * y; }

Quad quad_pow(const Quad& x, std::uint64_t n) {
  Quad result = Quad::from_rat(Rat(1), x.radicand());
  Quad base = x;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Rat quad_extract_rat(const Quad& x) {
  if (x.radical_part().is_zero()) return x.rational_part();
  Rat s;
  if (x.radicand().is_square(&s)) {
    return x.rational_part() + x.radical_part() * s;
  }
  throw Error(ErrorKind::extraction,
              "irrational residue in " + x.to_string() + " (radicand is not a rational square)");
}

std::ostream& operator<<(std::ostream& os, const Quad& x) { return os << x.to_string(); }

}  // namespace agp
