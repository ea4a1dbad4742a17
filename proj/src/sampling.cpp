#include "agp/sampling.hpp"

namespace agp::sampling {

namespace {

bool within(const Rat& x, long bound) {
  return abs(x.numerator()) <= bound && x.denominator() <= bound;
}

}  // namespace

Rat random_rat(Rng& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rat(num(rng), den(rng));
}

Rat random_nonzero_rat(Rng& rng, long bound) {
  for (;;) {
    Rat x = random_rat(rng, bound);
    if (!x.is_zero()) return x;
  }
}

AgpParams random_params(Rng& rng, Stratum stratum, long bound) {
  AgpParams p{random_rat(rng, bound), random_rat(rng, bound), random_rat(rng, bound),
              random_nonzero_rat(rng, bound)};
  switch (stratum) {
    case Stratum::general: break;
    case Stratum::zero_ratio: p.r = Rat(0); break;
    case Stratum::unit_ratio: p.r = Rat(1); break;
    case Stratum::zero_difference: p.d = Rat(0); break;
    case Stratum::zero_first: p.a = Rat(0); break;
    case Stratum::repeated_root:
      for (;;) {
        p.a = random_nonzero_rat(rng, bound);
        p.r = random_nonzero_rat(rng, bound);
        p.d = -(p.a * p.a) / (Rat(4) * p.r);
        if (within(p.d, bound)) break;
      }
      break;
  }
  return p;
}

AgpParams stratified_params(Rng& rng, std::size_t index, long bound) {
  return random_params(rng, static_cast<Stratum>(index % kStrataCount), bound);
}

}  // namespace agp::sampling
