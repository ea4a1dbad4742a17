#pragma once

#include <cstdint>

#include "agp/rational.hpp"

/// Closed forms for the classical progressions and the two first-order mixed
/// recurrences. Every ratio formula carries an explicit r = 1 branch because
/// exact arithmetic cannot take the 0/0 limit.
///
/// Index conventions differ per family and are fixed per function:
///   - arith_* / geo_*: 1-indexed, sums cover the first n terms.
///   - agp_*: 0-indexed, agp_sum covers k = 0..n inclusive (n + 1 terms).
///   - gap_*: 0-indexed, gap_sum covers the first n terms k = 0..n-1.
///   - rec1/rec2: a_0 = a, n counts applications of the step.
namespace agp::progressions {

enum class Kind { arithmetic, geometric, agp, gap, rec1, rec2 };

struct ProgressionSpec {
  Rat a;
  Rat d;
  Rat r;
  Kind kind = Kind::arithmetic;
};

/// a + (n-1)d, n >= 1.
Rat arith_term(const Rat& a, const Rat& d, std::uint64_t n);
/// (n/2)(2a + (n-1)d), n >= 1.
Rat arith_sum(const Rat& a, const Rat& d, std::uint64_t n);

/// a r^(n-1), n >= 1.
Rat geo_term(const Rat& a, const Rat& r, std::uint64_t n);
/// a (1 - r^n)/(1 - r); n a when r = 1.
Rat geo_sum(const Rat& a, const Rat& r, std::uint64_t n);
/// a/(1 - r); divergence error unless |r| < 1.
Rat geo_limit(const Rat& a, const Rat& r);

/// (a + k d) r^k with 0^0 = 1.
Rat agp_term(const Rat& a, const Rat& d, const Rat& r, std::uint64_t k);
/// sum_{k=0}^{n} (a + k d) r^k.
Rat agp_sum(const Rat& a, const Rat& d, const Rat& r, std::uint64_t n);
/// a/(1-r) + d r/(1-r)^2; divergence error unless |r| < 1.
Rat agp_sum_limit(const Rat& a, const Rat& d, const Rat& r);

/// a r^k + k d.
Rat gap_term(const Rat& a, const Rat& r, const Rat& d, std::uint64_t k);
/// sum_{k=0}^{n-1} (a r^k + k d).
Rat gap_sum(const Rat& a, const Rat& r, const Rat& d, std::uint64_t n);

/// n-th term of a_0 = a, a_n = a_{n-1} r + d.
Rat rec1_term(const Rat& a, const Rat& r, const Rat& d, std::uint64_t n);
/// n-th term of a_0 = a, a_n = (a_{n-1} + d) r.
Rat rec2_term(const Rat& a, const Rat& r, const Rat& d, std::uint64_t n);

}  // namespace agp::progressions
