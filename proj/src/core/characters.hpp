#pragma once

#include <string>

#include "core/exact.hpp"
#include "core/partition.hpp"

namespace skewtab {

// Cycle types with a closed character evaluation: (m,1^{n-m}) for m = 2..6
// and (2,2,1^{n-4}).
enum class SmallSupport { m2, m3, m4, m5, m6, two_two };

unsigned support_weight(SmallSupport s);
std::string support_name(SmallSupport s);

// Maps the non-fixed-point part of a cycle type (all 1s removed) to a
// support tag; UnsupportedError for anything else.
SmallSupport support_from_cycle(const Partition& stripped);

// chi^mu at (support, 1^{n-|support|}), evaluated from the content power
// sums with exact rational intermediates. Characters are integers; a
// non-integral value is an InternalError.
Int chi_small(const Partition& mu, SmallSupport s);

// The same values rebuilt from the q statistics. Defined for m2, m3, m4
// and two_two only.
Int chi_small_qform(const Partition& mu, SmallSupport s);

// General chi^mu(cls) by the Murnaghan-Nakayama recursion: border strips
// are removed as bead moves on the first-column hook lengths (beta-set),
// largest cycles first, memoized across calls. Once only fixed points
// remain the value is f^shape by the hook formula.
Int chi_mn(const Partition& mu, const CycleType& cls);

// f^{mu/lam} = sum_{nu |- m} z_nu^{-1} chi^mu(nu,1^{n-m}) chi^lam(nu).
// Requires |lam| <= |mu|; containment is not required, the sum evaluates
// to 0 whenever lam is not contained in mu.
Int frobenius_skew(const Partition& mu, const Partition& lam);

namespace detail {

// Negative control for the verification suite: the m = 6 evaluation with
// p_3 coefficient 24(7-n) in place of 6(25-4n). Returns the raw rational,
// which need not be an integer. Not reachable from the public surface.
Rat chi_m6_uncorrected(const Partition& mu);

}  // namespace detail

}  // namespace skewtab
