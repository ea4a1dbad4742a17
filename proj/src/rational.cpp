#include "agp/rational.hpp"

#include <cctype>
#include <ostream>

namespace agp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::arithmetic: return "arithmetic";
    case ErrorKind::parse: return "parse";
    case ErrorKind::context: return "context";
    case ErrorKind::extraction: return "extraction";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::invalid_ratio: return "invalid-ratio";
    case ErrorKind::inconsistent_data: return "inconsistent-initial-data";
    case ErrorKind::underdetermined: return "underdetermined-initial-data";
    case ErrorKind::lookup: return "lookup";
    case ErrorKind::no_limit: return "no-limit";
    case ErrorKind::degenerate_mode: return "degenerate-mode";
    case ErrorKind::probe: return "probe";
    case ErrorKind::internal_consistency: return "internal-consistency";
  }
  return "unknown";
}

Rat::Rat(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::arithmetic, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat::Rat(long numerator, long denominator)
    : Rat(BigInt(numerator), BigInt(denominator)) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const std::string_view body = trim(text);
  std::string_view rest = body;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const auto slash = rest.find('/');
  const std::string_view num = rest.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : rest.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::parse, "not a rational: '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rat(n, d);
}

bool Rat::is_square(Rat* root) const {
  if (sign() < 0) return false;
  const BigInt num = value_.get_num();
  const BigInt den = value_.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  if (root != nullptr) {
    *root = Rat(BigInt(sqrt(num)), BigInt(sqrt(den)));
  }
  return true;
}

std::string Rat::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat Rat::operator-() const {
  Rat out;
  out.value_ = -value_;
  return out;
}

Rat& Rat::operator+=(const Rat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorKind::arithmetic, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

Rat pow(const Rat& base, std::int64_t exponent) {
  if (exponent == 0) return Rat(1);
  if (exponent < 0) {
    if (base.is_zero()) {
      throw Error(ErrorKind::arithmetic, "zero raised to a negative power");
    }
    return pow(Rat(1) / base, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  return Rat(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.to_string(); }

}  // namespace agp
