#pragma once

#include "core/exact.hpp"
#include "core/partition.hpp"
#include "core/report.hpp"

namespace skewtab {

enum class Sign { plus, minus };

struct QIndex {
  Sign sign;
  unsigned r;
  unsigned t;
};

// p_l[C(mu)]: sum of l-th powers of the cell contents j-i.
Int content_power_sum(const Partition& mu, unsigned l);

// q^{+-}_{r,t} = sum_{i=1..k} ( C(mu_i,r+1) C(i-1,t) +- C(mu_i,t+1) C(i-1,r) ).
// Satisfies q^-_{r,r} = 0, q^+_{r,t} = q^+_{t,r}, q^-_{r,t} = -q^-_{t,r}.
Int q_value(const Partition& mu, QIndex idx);
Int q_plus(const Partition& mu, unsigned r, unsigned t);
Int q_minus(const Partition& mu, unsigned r, unsigned t);

// The same statistic from the conjugate-partition expansion
// sum_i C(mu_i,r+1) C(i-1,t) +- sum_j C(mu'_j,r+1) C(j-1,t);
// equal to q_value on every partition.
Int q_via_conjugate(const Partition& mu, QIndex idx);

// p_l[C(mu)] rebuilt from the q statistics through the signed phi
// expansion, split by the parity of l. The even case carries a half-sum
// that must cancel to an integer; a remainder is an InternalError.
Int p_via_q(const Partition& mu, unsigned l);

// Checks sum_i C(mu_i,t+1) C(i-1,r) = sum_j C(cand_j,r+1) C(j-1,t) over the
// full grid r <= r_max, t <= t_max, with `candidate` standing in the
// conjugate's role. Passing on a grid that reaches
// max(height(mu), height(candidate)) certifies candidate = conjugate(mu).
// The report carries the first failing (r,t).
VerificationReport conjugate_identity_holds(const Partition& mu, const Partition& candidate,
                                            unsigned r_max, unsigned t_max);

}  // namespace skewtab
