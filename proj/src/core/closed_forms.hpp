#pragma once

#include "core/exact.hpp"
#include "core/partition.hpp"

namespace skewtab {

// Printed variants of the m = 2 count. Each is transcribed independently
// from its own display so a slip in one is caught by agreement tests:
//   knuth: conjugate-pair form (sum over mu minus sum over mu')
//   schur: single-sum form with the mu_i(i-1) correction
//   qform: q^-_{1,0} + C(n,2)
enum class M2Variant { knuth, schur, qform };

// Variants of the m = 3 count:
//   expanded:       the fully expanded row-statistic form
//   qform:          q^+_{0,1} + 2q^+_{0,2} - q^+_{1,1} + (n-2)q^-_{1,0} + ...
//   conjugate_form: mixed mu/mu' form
enum class M3Variant { expanded, qform, conjugate_form };

// f^{mu/(m)} for m = 2, 3, 4. Domain: n >= m and mu_1 >= m (the skew shape
// must exist); every internal division is checked exact.
Int skew_count_m2(const Partition& mu, M2Variant variant);
Int skew_count_m3(const Partition& mu, M3Variant variant);
Int skew_count_m4(const Partition& mu);

// K(mu, (m,1^{n-m})). Returns 0 when mu_1 < m (the first row cannot hold
// m ones); otherwise equals f^{mu/(m)}: the hook formula for m = 1, the
// closed forms for m = 2..4, the Frobenius expansion beyond.
Int kostka_hook(const Partition& mu, unsigned long m);

}  // namespace skewtab
