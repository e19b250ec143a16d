#include "core/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "core/content_stats.hpp"
#include "core/errors.hpp"
#include "core/tableaux.hpp"

namespace skewtab {

unsigned support_weight(SmallSupport s) {
  switch (s) {
    case SmallSupport::m2: return 2;
    case SmallSupport::m3: return 3;
    case SmallSupport::m4: return 4;
    case SmallSupport::m5: return 5;
    case SmallSupport::m6: return 6;
    case SmallSupport::two_two: return 4;
  }
  throw InternalError("support_weight: bad tag");
}

std::string support_name(SmallSupport s) {
  switch (s) {
    case SmallSupport::m2: return "2";
    case SmallSupport::m3: return "3";
    case SmallSupport::m4: return "4";
    case SmallSupport::m5: return "5";
    case SmallSupport::m6: return "6";
    case SmallSupport::two_two: return "2,2";
  }
  throw InternalError("support_name: bad tag");
}

SmallSupport support_from_cycle(const Partition& stripped) {
  const auto& p = stripped.parts();
  if (p.size() == 1) {
    switch (p[0]) {
      case 2: return SmallSupport::m2;
      case 3: return SmallSupport::m3;
      case 4: return SmallSupport::m4;
      case 5: return SmallSupport::m5;
      case 6: return SmallSupport::m6;
      default: break;
    }
  }
  if (p.size() == 2 && p[0] == 2 && p[1] == 2) return SmallSupport::two_two;
  throw UnsupportedError("no closed character evaluation for cycle type (" +
                         stripped.to_string() + ",1^k)");
}

namespace {

Rat f_over_falling(const Partition& mu, unsigned m) {
  return Rat(hook_count(mu)) / Rat(falling_factorial(mu.n(), m));
}

void require_fits(const Partition& mu, SmallSupport s) {
  if (mu.n() < support_weight(s))
    throw DomainError("chi: cycle type (" + support_name(s) + ",1^k) does not fit in S_" +
                      std::to_string(mu.n()));
}

}  // namespace

Int chi_small(const Partition& mu, SmallSupport s) {
  require_fits(mu, s);
  const long n = static_cast<long>(mu.n());
  const auto p = [&](unsigned l) { return content_power_sum(mu, l); };
  const Int n2 = binomial(n, 2);
  const Int n3 = binomial(n, 3);
  Rat v;
  switch (s) {
    case SmallSupport::m2:
      v = f_over_falling(mu, 2) * Rat(2 * p(1));
      break;
    case SmallSupport::m3:
      v = f_over_falling(mu, 3) * Rat(3 * (p(2) - n2));
      break;
    case SmallSupport::m4:
      v = f_over_falling(mu, 4) * Rat(4 * (p(3) - Int(2 * n - 3) * p(1)));
      break;
    case SmallSupport::m5:
      v = f_over_falling(mu, 5) *
          Rat(5 * (p(4) - Int(3 * n - 10) * p(2) - 2 * p(1) * p(1) + 5 * n3 - 3 * n2));
      break;
    case SmallSupport::m6:
      v = f_over_falling(mu, 6) *
          Rat(6 * (p(5) + Int(25 - 4 * n) * p(3) + 2 * Int(3 * n - 4) * Int(n - 5) * p(1)) -
              36 * p(1) * p(2));
      break;
    case SmallSupport::two_two:
      v = f_over_falling(mu, 4) * Rat(4 * (p(1) * p(1) - 3 * p(2) + 2 * n2));
      break;
  }
  return to_integer(v, "character value");
}

Int chi_small_qform(const Partition& mu, SmallSupport s) {
  require_fits(mu, s);
  const long n = static_cast<long>(mu.n());
  const Int n2 = binomial(n, 2);
  Rat v;
  switch (s) {
    case SmallSupport::m2:
      v = f_over_falling(mu, 2) * Rat(2 * q_minus(mu, 1, 0));
      break;
    case SmallSupport::m3:
      v = f_over_falling(mu, 3) *
          Rat(3 * (q_plus(mu, 0, 1) + 2 * q_plus(mu, 0, 2) - q_plus(mu, 1, 1) - n2));
      break;
    case SmallSupport::m4:
      v = f_over_falling(mu, 4) *
          Rat(4 * (Int(4 - 2 * n) * q_minus(mu, 1, 0) + 6 * q_minus(mu, 2, 0) +
                   6 * q_minus(mu, 3, 0) - 6 * q_minus(mu, 2, 1)));
      break;
    case SmallSupport::two_two: {
      const Int q10 = q_minus(mu, 1, 0);
      v = f_over_falling(mu, 4) *
          Rat(4 * (q10 * q10 - 3 * q_plus(mu, 0, 1) - 6 * q_plus(mu, 0, 2) +
                   3 * q_plus(mu, 1, 1) + 2 * n2));
    } break;
    default:
      throw UnsupportedError("no q-form character for cycle type (" + support_name(s) +
                             ",1^k)");
  }
  return to_integer(v, "q-form character value");
}

namespace {

// Rebuilds a partition from bead positions; beta values are distinct.
std::vector<unsigned> partition_from_beta(std::vector<long> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const long k = static_cast<long>(beta.size());
  std::vector<unsigned> parts;
  for (long idx = 0; idx < k; ++idx) {
    const long part = beta[idx] - (k - 1 - idx);
    if (part > 0) parts.push_back(static_cast<unsigned>(part));
  }
  return parts;
}

using MnKey = std::pair<std::vector<unsigned>, std::vector<unsigned>>;
std::mutex g_mn_mutex;
std::map<MnKey, Int> g_mn_cache;

Int mn_recurse(const std::vector<unsigned>& shape, const std::vector<unsigned>& cycles) {
  if (cycles.empty()) return hook_count(Partition(shape));
  {
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    if (auto it = g_mn_cache.find({shape, cycles}); it != g_mn_cache.end())
      return it->second;
  }
  const unsigned r = cycles.front();
  const std::vector<unsigned> rest(cycles.begin() + 1, cycles.end());
  const long k = static_cast<long>(shape.size());
  std::vector<long> beta(k);
  for (long i = 0; i < k; ++i) beta[i] = static_cast<long>(shape[i]) + (k - 1 - i);

  // A border strip of size r is a bead move b -> b-r onto a free position;
  // its height is the number of beads jumped over.
  Int acc = 0;
  for (long i = 0; i < k; ++i) {
    const long target = beta[i] - static_cast<long>(r);
    if (target < 0) continue;
    bool occupied = false;
    int jumped = 0;
    for (long j = 0; j < k; ++j) {
      if (j == i) continue;
      if (beta[j] == target) {
        occupied = true;
        break;
      }
      if (beta[j] > target && beta[j] < beta[i]) ++jumped;
    }
    if (occupied) continue;
    std::vector<long> moved = beta;
    moved[i] = target;
    const Int sub = mn_recurse(partition_from_beta(std::move(moved)), rest);
    acc += (jumped % 2) ? -sub : sub;
  }
  std::lock_guard<std::mutex> lock(g_mn_mutex);
  g_mn_cache.emplace(MnKey{shape, cycles}, acc);
  return acc;
}

}  // namespace

Int chi_mn(const Partition& mu, const CycleType& cls) {
  if (cls.degree != mu.n())
    throw DomainError("chi_mn: cycle type degree " + std::to_string(cls.degree) +
                      " does not match |mu| = " + std::to_string(mu.n()));
  std::vector<unsigned> cycles;
  for (unsigned p : cls.parts.parts())
    if (p >= 2) cycles.push_back(p);
  return mn_recurse(mu.parts(), cycles);
}

Int frobenius_skew(const Partition& mu, const Partition& lam) {
  const unsigned long n = mu.n();
  const unsigned long m = lam.n();
  if (m > n)
    throw DomainError("frobenius_skew: |lam| = " + std::to_string(m) + " exceeds |mu| = " +
                      std::to_string(n));
  if (m == 0) return hook_count(mu);
  Rat acc = 0;
  for (const Partition& nu : generate_partitions(m)) {
    const Int outer_chi = chi_mn(mu, CycleType(nu, n));
    const Int inner_chi = chi_mn(lam, CycleType(nu, m));
    acc += Rat(outer_chi * inner_chi) / Rat(nu.z_factor());
  }
  const Int result = to_integer(acc, "frobenius expansion");
  if (result < 0) throw InternalError("frobenius expansion: negative count");
  return result;
}

namespace detail {

Rat chi_m6_uncorrected(const Partition& mu) {
  if (mu.n() < 6) throw DomainError("chi_m6_uncorrected: needs n >= 6");
  const long n = static_cast<long>(mu.n());
  const auto p = [&](unsigned l) { return content_power_sum(mu, l); };
  return f_over_falling(mu, 6) *
         Rat(6 * p(5) + Int(24) * Int(7 - n) * p(3) +
             12 * Int(3 * n - 4) * Int(n - 5) * p(1) - 36 * p(1) * p(2));
}

}  // namespace detail

}  // namespace skewtab
