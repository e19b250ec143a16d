#include "core/exact.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace skewtab {

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) { return v.get_str(); }

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(const Int& a, long b) {
  if (b < 0) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  return r;
}

Int binomial(long a, long b) { return binomial(Int(a), b); }

Rat binomial(const Rat& z, unsigned long b) {
  return falling_factorial(z, b) / Rat(factorial(b));
}

Rat falling_factorial(const Rat& z, unsigned long n) {
  Rat acc = 1;
  Rat term = z;
  for (unsigned long i = 0; i < n; ++i) {
    acc *= term;
    term -= 1;
  }
  return acc;
}

Int falling_factorial(unsigned long z, unsigned long n) {
  Int acc = 1;
  for (unsigned long i = 0; i < n; ++i) {
    if (i > z) return Int(0);
    acc *= Int(z - i);
  }
  return acc;
}

Int int_pow(long z, unsigned long l) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), Int(z).get_mpz_t(), l);
  return r;
}

namespace {

std::mutex g_stirling_mutex;

// rows[n][k] = S(n,k); grown on demand under the lock.
std::vector<std::vector<Int>>& stirling_rows() {
  static std::vector<std::vector<Int>> rows{{Int(1)}};
  return rows;
}

}  // namespace

Int stirling2(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  std::lock_guard<std::mutex> lock(g_stirling_mutex);
  auto& rows = stirling_rows();
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    const unsigned long m = rows.size();
    std::vector<Int> row(m + 1);
    row[0] = 0;
    row[m] = 1;
    for (unsigned long j = 1; j < m; ++j)
      row[j] = prev[j - 1] + Int(j) * prev[j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

Int c_number(unsigned long r, unsigned long t) {
  if (t > r) return 0;
  static std::mutex mutex;
  static std::map<std::pair<unsigned long, unsigned long>, Int> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, fresh] = cache.try_emplace({r, t});
  if (fresh) it->second = factorial(t) * stirling2(r + 1, t + 1);
  return it->second;
}

Int phi(unsigned long l, unsigned long h, unsigned long r, unsigned long t) {
  if (h > l) throw DomainError("phi: h must not exceed l");
  return binomial(static_cast<long>(l), static_cast<long>(h)) * c_number(h, r) *
         c_number(l - h, t);
}

Int power_sum_range(unsigned long l, unsigned long t) {
  Int acc = 0;
  Int p;
  for (unsigned long i = 1; i <= t; ++i) {
    mpz_ui_pow_ui(p.get_mpz_t(), i, l);
    acc += p;
  }
  return acc;
}

Int exact_div(const Int& num, const Int& den, const char* context) {
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw InternalError(std::string(context) + ": inexact division " +
                        num.get_str() + "/" + den.get_str());
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int to_integer(const Rat& value, const char* context) {
  Rat v = value;
  v.canonicalize();
  if (v.get_den() != 1)
    throw InternalError(std::string(context) + ": non-integral value " + v.get_str());
  return v.get_num();
}

}  // namespace skewtab
