#pragma once

#include <string_view>

#include "agp/quad.hpp"
#include "agp/rational.hpp"

namespace agp {

/// Parameters of the full-history recurrence
///   x_{n+1} = sum_{k=0}^{n} (a + k d) r^k x_{n-k},   n >= 0,
/// with initial datum x0.
struct AgpParams {
  Rat a;
  Rat d;
  Rat r;
  Rat x0;

  friend bool operator==(const AgpParams&, const AgpParams&) = default;
};

/// The equivalent second-order system x_{m+1} = P x_m + Q x_{m-1}, valid for
/// m >= 2 only. It is seeded from x1 and x2; x0 does not generally satisfy it.
struct SecondOrder {
  Rat P;
  Rat Q;
  Rat B;
  Rat x1;
  Rat x2;

  friend bool operator==(const SecondOrder&, const SecondOrder&) = default;
};

enum class RootClass { distinct_real, repeated, complex_pair, rational_roots };

std::string_view to_string(RootClass c);

struct EigenStructure {
  Rat delta;     // P^2 + 4Q
  Quad lambda1;  // (P + sqrt(delta))/2
  Quad lambda2;  // (P - sqrt(delta))/2
  RootClass root_class = RootClass::distinct_real;
};

/// P = a + 2r, Q = -(r^2 + (a - d) r), B = a^2 + (a + d) r,
/// x1 = a x0, x2 = B x0.
SecondOrder reduce(const AgpParams& p);

/// P^2 + 4Q. For a reduced system this equals a^2 + 4 d r.
Rat discriminant(const SecondOrder& s);

RootClass classify(const Rat& delta);

EigenStructure eigenvalues(const SecondOrder& s);

/// Inverse of reduce at a chosen ratio r != 0.
///
/// Throws invalid_ratio for r = 0, inconsistent_data when (x1, x2) is not a
/// multiple of (a, B), and underdetermined when a = B = 0 with x1 = x2 = 0
/// (every x0 then fits).
AgpParams identify(const Rat& P, const Rat& Q, const Rat& x1, const Rat& x2, const Rat& r);

/// The one-parameter family r -> (a(r), d(r)) of coefficient progressions
/// whose reduction has the given (P, Q):
///   a(r) = P - 2r,   d(r) = P - 2r + (Q + r^2)/r.
struct AgpFamily {
  Rat P;
  Rat Q;

  struct Point {
    Rat a;
    Rat d;
  };

  Point at(const Rat& r) const;
};

AgpFamily identify_family(const Rat& P, const Rat& Q);

}  // namespace agp
