#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agp/reducer.hpp"

namespace agp::catalog {

/// Textbook definition of a named sequence, kept apart from the recurrence
/// machinery: u_{k+1} = P u_k + Q u_{k-1} from two seed values.
struct ClassicalSeed {
  Rat P;
  Rat Q;
  Rat first;
  Rat second;
};

struct CatalogEntry {
  std::string name;
  AgpParams params;
  /// How x_n maps onto the classical sequence. In every entry x_n equals
  /// classical_values(name, ...)[n - 1].
  std::string index_map;
  ClassicalSeed classical_seed;
  std::string description;
};

/// Entry names in registry order.
std::span<const CatalogEntry> entries();

/// Throws a lookup error listing the available names.
const CatalogEntry& catalog_get(std::string_view name);

/// First `count` classical values, computed by integer iteration from the
/// standard seeds (F0 = 0, F1 = 1; J0 = 0, J1 = 1; P0 = 0, P1 = 1;
/// B1 = 1, B2 = 6). even-fibonacci takes every second Fibonacci number
/// starting at F2.
std::vector<Rat> classical_values(std::string_view name, std::size_t count);

}  // namespace agp::catalog
