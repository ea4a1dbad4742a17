#pragma once

// Test-only reference computations. Nothing here calls into the closed forms
// or engines under test.

#include <cstddef>
#include <vector>

#include "agp/quad.hpp"
#include "agp/rational.hpp"
#include "agp/sampling.hpp"

namespace oracle {

using agp::Quad;
using agp::Rat;

/// F_0..F_{count-1} by integer iteration.
inline std::vector<agp::BigInt> fibonacci(std::size_t count) {
  std::vector<agp::BigInt> f;
  agp::BigInt a = 0, b = 1;
  for (std::size_t i = 0; i < count; ++i) {
    f.push_back(a);
    agp::BigInt next = a + b;
    a = b;
    b = next;
  }
  return f;
}

/// u_0 = first, u_1 = second, u_{k+1} = P u_k + Q u_{k-1}.
inline std::vector<Rat> second_order(const Rat& P, const Rat& Q, const Rat& first,
                                     const Rat& second, std::size_t count) {
  std::vector<Rat> u{first, second};
  while (u.size() < count) u.push_back(P * u[u.size() - 1] + Q * u[u.size() - 2]);
  u.resize(count);
  return u;
}

/// x multiplied by itself n times, no squaring.
inline Quad repeated_product(const Quad& x, std::size_t n) {
  Quad out = Quad::from_rat(Rat(1), x.radicand());
  for (std::size_t i = 0; i < n; ++i) out = out * x;
  return out;
}

/// r^k by repeated multiplication (r^0 = 1).
inline Rat power(const Rat& r, std::size_t k) {
  Rat out(1);
  for (std::size_t i = 0; i < k; ++i) out *= r;
  return out;
}

inline agp::sampling::Rng rng(std::uint64_t seed = 20150202) { return agp::sampling::Rng(seed); }

}  // namespace oracle
