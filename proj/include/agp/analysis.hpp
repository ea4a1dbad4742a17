#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "agp/engines.hpp"

namespace agp {

/// Exact limit of x_{n+rho}/x_n: the rho-th power of the dominant root.
///
/// Requires delta > 0 with roots of distinct modulus (P != 0). The dominant
/// root is lambda1 when P > 0 and lambda2 when P < 0. Raises no_limit when
/// the moduli coincide and degenerate_mode when the dominant mode has a zero
/// coefficient in the solution.
Quad ratio_limit(const AgpParams& p, std::uint64_t rho);

/// x_{n+rho}/x_n computed exactly, then converted to double.
double empirical_ratio(const AgpParams& p, std::uint64_t rho, std::size_t n);

enum class Verdict { confirmed_match, discrepancy };

std::string_view to_string(Verdict v);

/// One printed claim checked against the convolution oracle on a concrete
/// witness. All *_value fields are evaluations at `witness`.
struct ErratumFinding {
  std::string check;           // short id, e.g. "radicand"
  std::string claim_location;  // where the claim appears
  std::string printed_form;
  std::string derived_form;
  std::string witness;
  std::string printed_value;
  std::string derived_value;
  std::string oracle_value;
  Verdict verdict = Verdict::confirmed_match;
};

/// Every check's derived side is confirmed against eval_convolution before
/// the finding is emitted; a failure there raises internal_consistency.
/// Findings are sorted by claim_location.
std::vector<ErratumFinding> erratum_report();

struct FittedRelation {
  Rat P;
  Rat Q;
};

/// (P, Q) solved from x1..x4 of a term vector; the second-order relation
/// holds from m = 2 on.
FittedRelation fit_second_order(const TermVector& terms);

}  // namespace agp
