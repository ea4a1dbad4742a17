#include "agp/progressions.hpp"

namespace agp::progressions {

namespace {

Rat count(std::uint64_t n) { return Rat(BigInt(static_cast<unsigned long>(n))); }

std::int64_t exponent(std::uint64_t n) { return static_cast<std::int64_t>(n); }

void require_positive_index(std::uint64_t n, const char* what) {
  if (n == 0) {
    throw Error(ErrorKind::arithmetic, std::string(what) + ": index must be >= 1");
  }
}

void require_convergent(const Rat& r) {
  if (abs(r) >= Rat(1)) {
    throw Error(ErrorKind::divergence,
                "series diverges for |r| >= 1 (r = " + r.to_string() + ")");
  }
}

}  // namespace

Rat arith_term(const Rat& a, const Rat& d, std::uint64_t n) {
  require_positive_index(n, "arith_term");
  return a + count(n - 1) * d;
}

Rat arith_sum(const Rat& a, const Rat& d, std::uint64_t n) {
  require_positive_index(n, "arith_sum");
  return count(n) / Rat(2) * (Rat(2) * a + count(n - 1) * d);
}

Rat geo_term(const Rat& a, const Rat& r, std::uint64_t n) {
  require_positive_index(n, "geo_term");
  return a * pow(r, exponent(n - 1));
}

Rat geo_sum(const Rat& a, const Rat& r, std::uint64_t n) {
  require_positive_index(n, "geo_sum");
  if (r == Rat(1)) return count(n) * a;
  return a * (Rat(1) - pow(r, exponent(n))) / (Rat(1) - r);
}

Rat geo_limit(const Rat& a, const Rat& r) {
  require_convergent(r);
  return a / (Rat(1) - r);
}

Rat agp_term(const Rat& a, const Rat& d, const Rat& r, std::uint64_t k) {
  return (a + count(k) * d) * pow(r, exponent(k));
}

Rat agp_sum(const Rat& a, const Rat& d, const Rat& r, std::uint64_t n) {
  if (r == Rat(1)) {
    return count(n + 1) * a + d * count(n) * count(n + 1) / Rat(2);
  }
  const Rat one_minus_r = Rat(1) - r;
  return (a - (a + count(n) * d) * pow(r, exponent(n + 1))) / one_minus_r +
         d * r * (Rat(1) - pow(r, exponent(n))) / (one_minus_r * one_minus_r);
}

Rat agp_sum_limit(const Rat& a, const Rat& d, const Rat& r) {
  require_convergent(r);
  const Rat one_minus_r = Rat(1) - r;
  return a / one_minus_r + d * r / (one_minus_r * one_minus_r);
}

Rat gap_term(const Rat& a, const Rat& r, const Rat& d, std::uint64_t k) {
  return a * pow(r, exponent(k)) + count(k) * d;
}

Rat gap_sum(const Rat& a, const Rat& r, const Rat& d, std::uint64_t n) {
  require_positive_index(n, "gap_sum");
  const Rat arithmetic_part = count(n) * count(n - 1) / Rat(2) * d;
  if (r == Rat(1)) return count(n) * a + arithmetic_part;
  return a * (Rat(1) - pow(r, exponent(n))) / (Rat(1) - r) + arithmetic_part;
}

Rat rec1_term(const Rat& a, const Rat& r, const Rat& d, std::uint64_t n) {
  if (r == Rat(1)) return a + count(n) * d;
  const Rat rn = pow(r, exponent(n));
  return a * rn + d * (Rat(1) - rn) / (Rat(1) - r);
}

Rat rec2_term(const Rat& a, const Rat& r, const Rat& d, std::uint64_t n) {
  if (r == Rat(1)) return a + count(n) * d;
  const Rat rn = pow(r, exponent(n));
  return a * rn + d * r * (Rat(1) - rn) / (Rat(1) - r);
}

}  // namespace agp::progressions
