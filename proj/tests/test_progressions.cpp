#include <doctest.h>

#include "agp/progressions.hpp"
#include "oracles.hpp"

using agp::Error;
using agp::ErrorKind;
using agp::Rat;
using namespace agp::progressions;

namespace {

// Test-side iteration of the first-order recurrences.
Rat iterate_rec1(Rat a, const Rat& r, const Rat& d, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) a = a * r + d;
  return a;
}

Rat iterate_rec2(Rat a, const Rat& r, const Rat& d, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) a = (a + d) * r;
  return a;
}

}  // namespace

TEST_CASE("arithmetic progression") {
  CHECK(arith_term(Rat(1), Rat(1), 5) == Rat(5));
  CHECK(arith_term(Rat(3), Rat(0), 100) == Rat(3));
  // a_1 = 1/2 stepped three times by 1/3
  CHECK(arith_term(Rat(1, 2), Rat(1, 3), 4) == Rat(1, 2) + Rat(1, 3) + Rat(1, 3) + Rat(1, 3));
  CHECK(arith_term(Rat(1, 2), Rat(1, 3), 4) == Rat(3, 2));

  CHECK(arith_sum(Rat(1), Rat(1), 10) == Rat(55));
  CHECK(arith_sum(Rat(7, 3), Rat(9), 1) == Rat(7, 3));
  CHECK(arith_sum(Rat(2), Rat(3), 4) == Rat(2 + 5 + 8 + 11));
  CHECK_THROWS_AS((void)arith_term(Rat(1), Rat(1), 0), Error);
}

TEST_CASE("geometric progression") {
  CHECK(geo_term(Rat(3), Rat(3), 4) == Rat(81));
  CHECK(geo_sum(Rat(1), Rat(1, 2), 3) == Rat(1) + Rat(1, 2) + Rat(1, 4));
  CHECK(geo_sum(Rat(1), Rat(1, 2), 3) == Rat(7, 4));
  CHECK(geo_sum(Rat(5), Rat(1), 4) == Rat(20));
  CHECK(geo_limit(Rat(1), Rat(1, 2)) == Rat(2));
  try {
    (void)geo_limit(Rat(1), Rat(-1));
    FAIL("divergent limit accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::divergence);
  }
}

TEST_CASE("arithmetic-geometric terms and sums") {
  CHECK(agp_term(Rat(0), Rat(5, 2), Rat(1, 2), 1) == Rat(5, 4));
  CHECK(agp_term(Rat(0), Rat(5, 2), Rat(1, 2), 3) == Rat(15, 16));
  CHECK(agp_term(Rat(7), Rat(2), Rat(0), 0) == Rat(7));

  CHECK(agp_sum(Rat(1), Rat(1), Rat(1, 2), 2) == Rat(1) + Rat(1) + Rat(3, 4));
  CHECK(agp_sum(Rat(1), Rat(1), Rat(1, 2), 2) == Rat(11, 4));
  CHECK(agp_sum(Rat(-3, 5), Rat(4), Rat(9), 0) == Rat(-3, 5));
  CHECK(agp_sum(Rat(1), Rat(1), Rat(1), 3) == Rat(1 + 2 + 3 + 4));

  CHECK(agp_sum_limit(Rat(1), Rat(1), Rat(1, 2)) == Rat(4));
  CHECK(agp_sum_limit(Rat(3), Rat(0), Rat(1, 3)) == geo_limit(Rat(3), Rat(1, 3)));
  CHECK(agp_sum_limit(Rat(0), Rat(1), Rat(1, 2)) == Rat(2));
  CHECK_THROWS_AS((void)agp_sum_limit(Rat(1), Rat(1), Rat(1)), Error);
}

TEST_CASE("geometric-arithmetic terms and sums") {
  CHECK(gap_term(Rat(1), Rat(2), Rat(3), 3) == Rat(8 + 9));
  CHECK(gap_term(Rat(4, 3), Rat(5), Rat(-1), 0) == Rat(4, 3));
  CHECK(gap_term(Rat(2), Rat(1), Rat(5), 4) == Rat(2 + 20));
  CHECK(gap_sum(Rat(1), Rat(2), Rat(3), 4) == Rat(1 + 5 + 10 + 17));
  CHECK(gap_sum(Rat(-2, 7), Rat(3), Rat(8), 1) == Rat(-2, 7));
  CHECK(gap_sum(Rat(1), Rat(1), Rat(1), 4) == Rat(1 + 2 + 3 + 4));
}

TEST_CASE("first-order mixed recurrences") {
  CHECK(rec1_term(Rat(1), Rat(2), Rat(3), 2) == iterate_rec1(Rat(1), Rat(2), Rat(3), 2));
  CHECK(rec1_term(Rat(1), Rat(2), Rat(3), 2) == Rat(13));
  CHECK(rec1_term(Rat(5, 2), Rat(3), Rat(1), 0) == Rat(5, 2));
  CHECK(rec1_term(Rat(7), Rat(1), Rat(2), 5) == Rat(17));

  CHECK(rec2_term(Rat(1), Rat(2), Rat(3), 1) == Rat(8));
  CHECK(rec2_term(Rat(5, 2), Rat(3), Rat(1), 0) == Rat(5, 2));
  CHECK(rec2_term(Rat(1), Rat(2), Rat(3), 2) == iterate_rec2(Rat(1), Rat(2), Rat(3), 2));
  CHECK(rec2_term(Rat(1), Rat(2), Rat(3), 2) == Rat(22));
}

TEST_CASE("sums equal termwise addition") {
  auto rng = oracle::rng(3);
  std::uniform_int_distribution<int> length(0, 100);
  for (int i = 0; i < 60; ++i) {
    const Rat a = agp::sampling::random_rat(rng);
    const Rat d = agp::sampling::random_rat(rng);
    const Rat r = i % 10 == 0 ? Rat(1) : agp::sampling::random_rat(rng);
    const auto n = static_cast<std::uint64_t>(length(rng));

    Rat agp_direct;
    for (std::uint64_t k = 0; k <= n; ++k) agp_direct += (a + Rat(long(k)) * d) * oracle::power(r, k);
    CHECK(agp_sum(a, d, r, n) == agp_direct);

    if (n >= 1) {
      Rat gap_direct;
      for (std::uint64_t k = 0; k < n; ++k) gap_direct += a * oracle::power(r, k) + Rat(long(k)) * d;
      CHECK(gap_sum(a, r, d, n) == gap_direct);
    }

    if (r != Rat(1)) {
      const Rat rn = oracle::power(r, n);
      CHECK((Rat(1) - r) * agp_sum(a, d, r, n) + (a + Rat(long(n)) * d) * rn * r - a ==
            d * r * (Rat(1) - rn) / (Rat(1) - r));
    }
  }
}

TEST_CASE("closed-form first-order terms match iteration") {
  auto rng = oracle::rng(5);
  for (int i = 0; i < 25; ++i) {
    const Rat a = agp::sampling::random_rat(rng);
    const Rat d = agp::sampling::random_rat(rng);
    const Rat r = i % 5 == 0 ? Rat(1) : agp::sampling::random_rat(rng, 3);
    for (std::uint64_t n : {0, 1, 2, 17, 200}) {
      CHECK(rec1_term(a, r, d, n) == iterate_rec1(a, r, d, n));
      CHECK(rec2_term(a, r, d, n) == iterate_rec2(a, r, d, n));
    }
  }
}

TEST_CASE("partial sums approach the limit monotonically") {
  for (const auto& [a, d, r] : {std::tuple{Rat(1), Rat(1), Rat(1, 2)},
                                std::tuple{Rat(3, 2), Rat(1, 7), Rat(9, 10)},
                                std::tuple{Rat(1, 5), Rat(4), Rat(1, 3)}}) {
    const Rat limit = agp_sum_limit(a, d, r);
    Rat previous_gap = abs(agp_sum(a, d, r, 0) - limit);
    for (std::uint64_t n = 1; n <= 100; ++n) {
      const Rat gap = abs(agp_sum(a, d, r, n) - limit);
      CHECK(gap < previous_gap);
      previous_gap = gap;
    }
  }
}
