#pragma once

#include <cstddef>
#include <random>

#include "agp/reducer.hpp"

namespace agp::sampling {

using Rng = std::mt19937_64;

/// Uniform numerator in [-bound, bound], denominator in [1, bound].
Rat random_rat(Rng& rng, long bound = 20);
Rat random_nonzero_rat(Rng& rng, long bound = 20);

enum class Stratum { general, zero_ratio, unit_ratio, zero_difference, zero_first, repeated_root };

inline constexpr std::size_t kStrataCount = 6;

/// Parameters from one stratum. Every field stays within `bound`;
/// repeated_root draws until a^2 + 4dr = 0 with a != 0 fits.
AgpParams random_params(Rng& rng, Stratum stratum, long bound = 20);

/// Stratum chosen round-robin from `index`.
AgpParams stratified_params(Rng& rng, std::size_t index, long bound = 20);

}  // namespace agp::sampling
