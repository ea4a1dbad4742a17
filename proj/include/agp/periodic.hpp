#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "agp/engines.hpp"

namespace agp {

/// One coefficient progression (a_i + k d_i) r_i^k.
struct CoefficientBank {
  Rat a;
  Rat d;
  Rat r;

  friend bool operator==(const CoefficientBank&, const CoefficientBank&) = default;
};

/// Full-history recurrence whose coefficient bank rotates with the step:
/// x_{n+1} uses bank (n mod m), so n = 0 (mod m) uses the first bank.
///
/// The nonvanishing condition a_1...a_m r_1...r_m != 0 is reported by
/// satisfies_nonvanishing() but never enforced.
struct PeriodicParams {
  std::vector<CoefficientBank> banks;
  Rat x0;

  bool satisfies_nonvanishing() const;
};

/// Direct O(n^2) evaluation. `phase` offsets bank selection to
/// ((n + phase) mod m). With one bank this equals eval_convolution.
TermVector eval_periodic(const PeriodicParams& p, std::size_t n, std::size_t phase = 0);

struct GrowthDiagnostic {
  std::vector<double> step_ratios;  // x_{k+1}/x_k for the last m steps ending at n
  double period_ratio = 0;          // x_n / x_{n-m}
  double previous_period_ratio = 0; // x_{n-m} / x_{n-2m}
  bool stabilized = false;          // |period_ratio - previous| <= tol
};

/// Ratio diagnostics at the end of x_0..x_n. Needs n >= 2m; raises a probe
/// error when a divisor term is zero.
GrowthDiagnostic empirical_growth(const PeriodicParams& p, std::size_t n, double tol);

/// Grammar: banks separated by ';', each "a,d,r" with Rat-form fields;
/// whitespace is ignored. Example: "1,0,1; 2,0,1".
std::vector<CoefficientBank> parse_banks(const std::string& text);

/// Config file grammar: one bank per line as "a d r" or "a,d,r"; an optional
/// line "x0 = <rat>"; blank lines and lines starting with '#' are skipped.
PeriodicParams parse_periodic_config(const std::string& contents);

}  // namespace agp
