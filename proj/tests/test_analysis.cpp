#include <doctest.h>

#include <cmath>
#include <map>

#include "agp/analysis.hpp"
#include "agp/catalog.hpp"
#include "oracles.hpp"

using agp::AgpParams;
using agp::Error;
using agp::ErrorKind;
using agp::Quad;
using agp::Rat;
using agp::Verdict;

namespace {

const AgpParams& params(const char* name) { return agp::catalog::catalog_get(name).params; }

ErrorKind limit_error(const AgpParams& p) {
  try {
    (void)agp::ratio_limit(p, 1);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("limit returned");
  return ErrorKind::internal_consistency;
}

}  // namespace

TEST_CASE("exact ratio limits") {
  CHECK(agp::ratio_limit(params("fibonacci"), 1) == Quad(Rat(1, 2), Rat(1, 2), Rat(5)));
  CHECK(agp::ratio_limit(params("balancing"), 1) == Quad(Rat(3), Rat(1, 2), Rat(32)));
  CHECK(agp::ratio_limit(params("balancing"), 1).to_pretty_string() == "3 + 2*sqrt(2)");
  const Quad squared = oracle::repeated_product(Quad(Rat(3), Rat(1, 2), Rat(32)), 2);
  CHECK(agp::ratio_limit(params("balancing"), 2) == squared);
  CHECK(squared.to_pretty_string() == "17 + 12*sqrt(2)");
}

TEST_CASE("limits multiply") {
  for (const char* name : {"fibonacci", "pell", "balancing", "jacobsthal", "even-fibonacci"}) {
    for (std::uint64_t a = 1; a <= 3; ++a) {
      for (std::uint64_t b = 1; b <= 3; ++b) {
        CHECK(agp::ratio_limit(params(name), a + b) ==
              agp::quad_mul(agp::ratio_limit(params(name), a), agp::ratio_limit(params(name), b)));
      }
    }
  }
}

TEST_CASE("no limit without a dominant root") {
  // P = 2, Q = -1: repeated root
  CHECK(limit_error(AgpParams{Rat(0), Rat(0), Rat(1), Rat(1)}) == ErrorKind::no_limit);
  // a = 1, d = -1, r = 1: delta = 1 - 4 < 0
  CHECK(limit_error(AgpParams{Rat(1), Rat(-1), Rat(1), Rat(1)}) == ErrorKind::no_limit);
  // x0 = 0 removes both modes
  CHECK(limit_error(AgpParams{Rat(1), Rat(1), Rat(1), Rat(0)}) == ErrorKind::degenerate_mode);
  // a = -2, r = 1: P = 0 with delta = 4 + 4d > 0
  CHECK(limit_error(AgpParams{Rat(-2), Rat(1), Rat(1), Rat(1)}) == ErrorKind::no_limit);
}

TEST_CASE("negative trace picks the other root") {
  // a = -3, d = 1, r = 1: P = -1, Q = -(1 - 4) = 3, delta = 13
  const AgpParams p{Rat(-3), Rat(1), Rat(1), Rat(1)};
  const Quad limit = agp::ratio_limit(p, 1);
  CHECK(limit == Quad(Rat(-1, 2), Rat(-1, 2), Rat(13)));
  CHECK(std::abs(agp::empirical_ratio(p, 1, 80) - limit.to_double()) < 1e-12);
}

TEST_CASE("empirical ratios") {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::abs(agp::empirical_ratio(params("fibonacci"), 1, 40) - phi) < 1e-12);
  CHECK(std::abs(agp::empirical_ratio(params("pell"), 1, 40) - (1 + std::sqrt(2.0))) < 1e-12);
  CHECK(std::abs(agp::empirical_ratio(params("even-fibonacci"), 1, 30) - (3 + std::sqrt(5.0)) / 2) <
        1e-12);
  try {
    (void)agp::empirical_ratio(params("fibonacci"), 1, 1);
    FAIL("x_1 = 0 probed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::probe);
  }
}

TEST_CASE("empirical ratios converge to the exact limit") {
  for (const char* name : {"fibonacci", "pell", "balancing", "jacobsthal"}) {
    for (std::uint64_t rho = 1; rho <= 3; ++rho) {
      CAPTURE(name);
      CAPTURE(rho);
      const double limit = agp::ratio_limit(params(name), rho).to_double();
      CHECK(std::abs(agp::empirical_ratio(params(name), rho, 80) - limit) < 1e-12);
    }
  }
}

TEST_CASE("fitting a second-order relation from terms") {
  const auto fit = agp::fit_second_order(agp::eval_convolution(params("balancing"), 5));
  CHECK(fit.P == Rat(6));
  CHECK(fit.Q == Rat(-1));
}

TEST_CASE("erratum report") {
  const auto findings = agp::erratum_report();
  std::map<std::string, std::vector<agp::ErratumFinding>> by_check;
  for (const auto& f : findings) by_check[f.check].push_back(f);

  REQUIRE(by_check["radicand"].size() == 2);
  for (const auto& f : by_check["radicand"]) {
    if (f.claim_location.find("r != 1") != std::string::npos) {
      CHECK(f.verdict == Verdict::discrepancy);
      CHECK(f.printed_value == "6");
      CHECK(f.derived_value == "5");
    } else {
      CHECK(f.verdict == Verdict::confirmed_match);
      CHECK(f.printed_value == f.derived_value);
    }
    CHECK(f.derived_value == f.oracle_value);
  }

  REQUIRE(by_check["even-fib-x0-2"].size() == 1);
  const auto& odd = by_check["even-fib-x0-2"].front();
  CHECK(odd.verdict == Verdict::discrepancy);
  CHECK(odd.oracle_value == "6");
  CHECK(odd.printed_value == "5");

  for (const char* check : {"pell-closed-form", "balancing-char-poly", "fib-final-coefficient"}) {
    REQUIRE(by_check[check].size() == 1);
    CHECK(by_check[check].front().verdict == Verdict::discrepancy);
    CHECK(by_check[check].front().derived_value == by_check[check].front().oracle_value);
  }

  for (std::size_t i = 1; i < findings.size(); ++i) {
    CHECK(findings[i - 1].claim_location <= findings[i].claim_location);
  }
  for (const auto& f : findings) {
    CHECK_FALSE(f.witness.empty());
    if (f.verdict == Verdict::discrepancy) CHECK(f.printed_value != f.oracle_value);
  }
}
