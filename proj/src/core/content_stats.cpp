#include "core/content_stats.hpp"

#include <chrono>

#include "core/errors.hpp"

namespace skewtab {

Int content_power_sum(const Partition& mu, unsigned l) {
  Int acc = 0;
  for (long c : mu.contents()) acc += int_pow(c, l);
  return acc;
}

Int q_value(const Partition& mu, QIndex idx) {
  const long r = idx.r;
  const long t = idx.t;
  Int acc = 0;
  for (unsigned i = 1; i <= mu.height(); ++i) {
    const long part = mu.parts()[i - 1];
    const long row = static_cast<long>(i) - 1;
    const Int first = binomial(part, r + 1) * binomial(row, t);
    const Int second = binomial(part, t + 1) * binomial(row, r);
    acc += (idx.sign == Sign::plus) ? Int(first + second) : Int(first - second);
  }
  return acc;
}

Int q_plus(const Partition& mu, unsigned r, unsigned t) {
  return q_value(mu, {Sign::plus, r, t});
}

Int q_minus(const Partition& mu, unsigned r, unsigned t) {
  return q_value(mu, {Sign::minus, r, t});
}

Int q_via_conjugate(const Partition& mu, QIndex idx) {
  const long r = idx.r;
  const long t = idx.t;
  Int direct = 0;
  for (unsigned i = 1; i <= mu.height(); ++i)
    direct += binomial(static_cast<long>(mu.parts()[i - 1]), r + 1) *
              binomial(static_cast<long>(i) - 1, t);
  const Partition conj = mu.conjugate();
  Int mirrored = 0;
  for (unsigned j = 1; j <= conj.height(); ++j)
    mirrored += binomial(static_cast<long>(conj.parts()[j - 1]), r + 1) *
                binomial(static_cast<long>(j) - 1, t);
  return (idx.sign == Sign::plus) ? Int(direct + mirrored) : Int(direct - mirrored);
}

Int p_via_q(const Partition& mu, unsigned l) {
  if (l % 2 == 1) {
    // p_{2L+1} = sum_{h<=L} sum_{r<=h} sum_{t<=l-h} (-1)^h phi_l(h,r,t) q^-_{t,r}
    const unsigned L = (l - 1) / 2;
    Int acc = 0;
    for (unsigned h = 0; h <= L; ++h) {
      for (unsigned r = 0; r <= h; ++r) {
        for (unsigned t = 0; t + h <= l; ++t) {
          const Int term = phi(l, h, r, t) * q_minus(mu, t, r);
          acc += (h % 2) ? -term : term;
        }
      }
    }
    return acc;
  }
  // p_{2L} = sum_{h<=L-1} sum_{r<=h} sum_{t<=l-h} (-1)^h phi_l(h,r,t) q^+_{r,t}
  //          + (1/2)(-1)^L sum_{r<=L} sum_{t<=L} phi_l(L,r,t) q^+_{r,t}
  const unsigned L = l / 2;
  Int acc = 0;
  for (unsigned h = 0; h + 1 <= L; ++h) {
    for (unsigned r = 0; r <= h; ++r) {
      for (unsigned t = 0; t + h <= l; ++t) {
        const Int term = phi(l, h, r, t) * q_plus(mu, r, t);
        acc += (h % 2) ? -term : term;
      }
    }
  }
  Int half_sum = 0;
  for (unsigned r = 0; r <= L; ++r)
    for (unsigned t = 0; t <= L; ++t) half_sum += phi(l, L, r, t) * q_plus(mu, r, t);
  const Int half = exact_div(half_sum, 2, "p_via_q even-case half term");
  return (L % 2) ? Int(acc - half) : Int(acc + half);
}

VerificationReport conjugate_identity_holds(const Partition& mu, const Partition& candidate,
                                            unsigned r_max, unsigned t_max) {
  VerificationReport rep{"conjugate-identity"};
  const auto start = std::chrono::steady_clock::now();
  const std::string input_base =
      "mu=(" + mu.to_string() + "),candidate=(" + candidate.to_string() + ")";
  for (unsigned r = 0; r <= r_max; ++r) {
    for (unsigned t = 0; t <= t_max; ++t) {
      Int lhs = 0;
      for (unsigned i = 1; i <= mu.height(); ++i)
        lhs += binomial(static_cast<long>(mu.parts()[i - 1]), static_cast<long>(t) + 1) *
               binomial(static_cast<long>(i) - 1, static_cast<long>(r));
      Int rhs = 0;
      for (unsigned j = 1; j <= candidate.height(); ++j)
        rhs += binomial(static_cast<long>(candidate.parts()[j - 1]), static_cast<long>(r) + 1) *
               binomial(static_cast<long>(j) - 1, static_cast<long>(t));
      rep.record("conjugate-identity",
                 input_base + ",r=" + std::to_string(r) + ",t=" + std::to_string(t), lhs,
                 rhs);
    }
  }
  rep.set_elapsed_ms(std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count());
  return rep;
}

}  // namespace skewtab
