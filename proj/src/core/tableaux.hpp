#pragma once

#include <vector>

#include "core/exact.hpp"
#include "core/partition.hpp"

namespace skewtab {

// Cell cap for the exhaustive counters; growth past this is factorial.
inline constexpr unsigned kDefaultEnumCap = 14;

// f^mu by the hook formula. The division n!/prod(hooks) is checked exact.
Int hook_count(const Partition& mu);

// Exact skew SYT count by backtracking over which row receives each
// successive entry. Disconnected skew diagrams are handled naturally.
// Throws CapExceededError when the shape has more than cap cells.
Int enumerate_skew_syt(const SkewShape& shape, unsigned cap = kDefaultEnumCap);

// f^{mu/nu} = N! * det[ 1/(mu_i - nu_j - i + j)! ] with 1/(negative)! = 0.
// Rows are scaled to integers and the determinant is computed by
// fraction-free (Bareiss) elimination; the result is checked integral and
// nonnegative.
Int aitken_count(const SkewShape& shape);

// SSYT weight: entry i appears entries[i-1] times.
struct WeightVector {
  std::vector<unsigned> entries;

  unsigned long total() const;
};

// Kostka number K(mu, weight) by exhaustive semistandard fill.
Int kostka_enumerate(const Partition& mu, const WeightVector& weight,
                     unsigned cap = kDefaultEnumCap);

}  // namespace skewtab
