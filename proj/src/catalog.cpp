#include "agp/catalog.hpp"

#include <array>

namespace agp::catalog {

namespace {

const std::array<CatalogEntry, 5>& registry() {
  static const std::array<CatalogEntry, 5> kEntries = {{
      {"fibonacci",
       {Rat(0), Rat(5, 2), Rat(1, 2), Rat(4, 5)},
       "x_n = F_(n-1), F_0 = 0",
       {Rat(1), Rat(1), Rat(0), Rat(1)},
       "Fibonacci numbers 0, 1, 1, 2, 3, 5, ..."},
      {"jacobsthal",
       {Rat(0), Rat(9, 2), Rat(1, 2), Rat(4, 9)},
       "x_n = J_(n-1), J_0 = 0",
       {Rat(1), Rat(2), Rat(0), Rat(1)},
       "Jacobsthal numbers 0, 1, 1, 3, 5, 11, ..."},
      {"pell",
       {Rat(0), Rat(2), Rat(1), Rat(1, 2)},
       "x_n = P_(n-1), P_0 = 0",
       {Rat(2), Rat(1), Rat(0), Rat(1)},
       "Pell numbers 0, 1, 2, 5, 12, ..."},
      {"balancing",
       {Rat(4), Rat(4), Rat(1), Rat(1, 4)},
       "x_n = B_n, B_1 = 1, B_2 = 6",
       {Rat(6), Rat(-1), Rat(1), Rat(6)},
       "balancing numbers 1, 6, 35, 204, ..."},
      {"even-fibonacci",
       {Rat(1), Rat(1), Rat(1), Rat(1)},
       "x_n = F_(2n)",
       {Rat(3), Rat(-1), Rat(1), Rat(3)},
       "even-index Fibonacci numbers 1, 3, 8, 21, ..."},
  }};
  return kEntries;
}

std::vector<Rat> iterate(const ClassicalSeed& seed, std::size_t count) {
  std::vector<Rat> out;
  out.reserve(count);
  if (count >= 1) out.push_back(seed.first);
  if (count >= 2) out.push_back(seed.second);
  while (out.size() < count) {
    const std::size_t k = out.size();
    out.push_back(seed.P * out[k - 1] + seed.Q * out[k - 2]);
  }
  return out;
}

std::vector<Rat> even_fibonacci(std::size_t count) {
  std::vector<Rat> out;
  out.reserve(count);
  BigInt prev = 0;  // F_0
  BigInt cur = 1;   // F_1
  for (std::size_t index = 1; out.size() < count; ++index) {
    if (index % 2 == 0) out.emplace_back(cur);
    BigInt next = prev + cur;
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace

std::span<const CatalogEntry> entries() { return registry(); }

const CatalogEntry& catalog_get(std::string_view name) {
  for (const CatalogEntry& e : registry()) {
    if (e.name == name) return e;
  }
  std::string known;
  for (const CatalogEntry& e : registry()) {
    known += known.empty() ? e.name : ", " + e.name;
  }
  throw Error(ErrorKind::lookup,
              "unknown sequence '" + std::string(name) + "'; available: " + known);
}

std::vector<Rat> classical_values(std::string_view name, std::size_t count) {
  const CatalogEntry& entry = catalog_get(name);
  if (entry.name == "even-fibonacci") return even_fibonacci(count);
  return iterate(entry.classical_seed, count);
}

}  // namespace agp::catalog
