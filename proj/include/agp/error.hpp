#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agp {

enum class ErrorKind {
  arithmetic,            // division by zero, 0 to a negative power
  parse,                 // malformed textual input
  context,               // quadratic-field radicand mismatch
  extraction,            // irrational residue where a rational was required
  divergence,            // limit requested for a divergent series
  invalid_ratio,         // r = 0 where the inverse map divides by r
  inconsistent_data,     // initial data outside the one-parameter solution family
  underdetermined,       // initial data fits every x0
  lookup,                // unknown catalog name
  no_limit,              // ratio limit does not exist
  degenerate_mode,       // dominant mode absent from the solution
  probe,                 // zero term at a probed index
  internal_consistency,  // engines disagree or a radical part failed to cancel
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind decides the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace agp
