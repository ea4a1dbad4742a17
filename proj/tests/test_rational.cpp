#include <doctest.h>

#include "agp/rational.hpp"
#include "oracles.hpp"

using agp::Error;
using agp::ErrorKind;
using agp::Rat;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an agp::Error");
  return ErrorKind::internal_consistency;
}

}  // namespace

TEST_CASE("rational arithmetic examples") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(4, 6).numerator() == 2);
  CHECK(Rat(4, 6).denominator() == 3);
  CHECK(agp::pow(Rat(1, 2), -2) == Rat(4));
  CHECK(agp::pow(Rat(0), 0) == Rat(1));
  CHECK(agp::pow(Rat(-2, 3), 3) == Rat(-8, 27));
}

TEST_CASE("canonical form keeps the sign on the numerator") {
  const Rat x(3, -6);
  CHECK(x.numerator() == -1);
  CHECK(x.denominator() == 2);
  CHECK(x.to_string() == "-1/2");
  CHECK(Rat(0, -5).to_string() == "0");
  CHECK(Rat(10, 5).is_integer());
}

TEST_CASE("division by zero is an arithmetic error") {
  CHECK(kind_of([] { (void)(Rat(1) / Rat(0)); }) == ErrorKind::arithmetic);
  CHECK(kind_of([] { (void)agp::pow(Rat(0), -1); }) == ErrorKind::arithmetic);
  CHECK(kind_of([] { (void)Rat(1, 0); }) == ErrorKind::arithmetic);
}

TEST_CASE("parsing") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-3/4") == Rat(-3, 4));
  CHECK(Rat::parse("+2") == Rat(2));
  CHECK(Rat::parse(" 6/8 ") == Rat(3, 4));
  CHECK(Rat::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  for (const char* bad : {"", "1/0", "abc", "1/-2", "1.5", "--1", "3/", "/3", "1 /2"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { (void)Rat::parse(bad); }) == ErrorKind::parse);
  }
}

TEST_CASE("rational squares") {
  Rat root;
  CHECK(Rat(9, 4).is_square(&root));
  CHECK(root == Rat(3, 2));
  CHECK_FALSE(Rat(2).is_square());
  CHECK_FALSE(Rat(-4).is_square());
  CHECK(Rat(0).is_square());
}

TEST_CASE("field axioms on random rationals") {
  auto rng = oracle::rng();
  for (int i = 0; i < 500; ++i) {
    const Rat x = agp::sampling::random_rat(rng);
    const Rat y = agp::sampling::random_rat(rng);
    const Rat z = agp::sampling::random_rat(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x - x == Rat(0));
    if (!x.is_zero()) CHECK(x * (Rat(1) / x) == Rat(1));
    CHECK(Rat::parse(x.to_string()) == x);
  }
}
