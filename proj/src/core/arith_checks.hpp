#pragma once

#include <string_view>
#include <vector>

#include "core/exact.hpp"
#include "core/report.hpp"

namespace skewtab {

// Exhaustive test grids for the scalar identity checkers. Defaults match
// the verification suite.
struct ArithGrid {
  unsigned l_max = 8;         // R-recurrence, R-closed-form, monomial-expansion
  unsigned t_max = 30;        // upper summation bound t
  unsigned hockey_max = 30;   // both indices of the hockey-stick check
  unsigned rec_max = 10;      // C-recurrence indices
  long z_min = -5;            // integer z range for monomial-expansion
  long z_max = 20;
  std::vector<Rat> z_samples = {Rat(7, 2)};  // extra rational z points
};

// identity is one of: R-recurrence, R-closed-form, monomial-expansion,
// hockey-stick, C-recurrence. Both sides of the named identity are
// evaluated exactly over the whole grid; the report carries the first
// failing tuple, if any.
VerificationReport check_arith_identity(std::string_view identity,
                                        const ArithGrid& grid = {});

}  // namespace skewtab
