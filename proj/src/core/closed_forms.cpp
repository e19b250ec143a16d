#include "core/closed_forms.hpp"

#include <string>

#include "core/characters.hpp"
#include "core/content_stats.hpp"
#include "core/errors.hpp"
#include "core/tableaux.hpp"

namespace skewtab {

namespace {

void require_strip(const Partition& mu, unsigned m, const char* what) {
  if (mu.n() < m)
    throw DomainError(std::string(what) + ": needs n >= " + std::to_string(m));
  if (mu.first_part() < m)
    throw DomainError(std::string(what) + ": first row shorter than m");
}

}  // namespace

Int skew_count_m2(const Partition& mu, M2Variant variant) {
  require_strip(mu, 2, "skew_count_m2");
  const long n = static_cast<long>(mu.n());
  Int num;
  switch (variant) {
    case M2Variant::knuth: {
      Int rows = 0;
      for (unsigned p : mu.parts()) rows += binomial(static_cast<long>(p), 2);
      const Partition conj = mu.conjugate();
      Int cols = 0;
      for (unsigned p : conj.parts()) cols += binomial(static_cast<long>(p), 2);
      num = rows - cols + binomial(n, 2);
    } break;
    case M2Variant::schur: {
      Int s = 0;
      for (unsigned i = 1; i <= mu.height(); ++i) {
        const long part = mu.parts()[i - 1];
        s += binomial(part, 2) - Int(part) * Int(static_cast<long>(i) - 1);
      }
      num = s + binomial(n, 2);
    } break;
    case M2Variant::qform:
      num = q_minus(mu, 1, 0) + binomial(n, 2);
      break;
  }
  return exact_div(hook_count(mu) * num, falling_factorial(mu.n(), 2), "skew_count_m2");
}

Int skew_count_m3(const Partition& mu, M3Variant variant) {
  require_strip(mu, 3, "skew_count_m3");
  const long n = static_cast<long>(mu.n());
  Int num;
  switch (variant) {
    case M3Variant::expanded: {
      Int a = 0, b = 0, c = 0, d = 0;
      for (unsigned i = 1; i <= mu.height(); ++i) {
        const long part = mu.parts()[i - 1];
        const long row = static_cast<long>(i) - 1;
        a += Int(part) * Int(row) + binomial(part, 2);
        b += binomial(part, 2) - Int(part) * Int(row);
        c += Int(part) * binomial(row, 2) + binomial(part, 3);
        d += binomial(part, 2) * Int(row);
      }
      num = a + Int(n - 2) * b + 2 * c - 2 * d + binomial(n, 3) - binomial(n, 2);
    } break;
    case M3Variant::qform:
      num = q_plus(mu, 0, 1) + 2 * q_plus(mu, 0, 2) - q_plus(mu, 1, 1) +
            Int(n - 2) * q_minus(mu, 1, 0) + binomial(n, 3) - binomial(n, 2);
      break;
    case M3Variant::conjugate_form: {
      const Partition conj = mu.conjugate();
      Int rows2 = 0, rows3 = 0, rows_weighted = 0;
      for (unsigned i = 1; i <= mu.height(); ++i) {
        const long part = mu.parts()[i - 1];
        rows2 += binomial(part, 2);
        rows3 += binomial(part, 3);
        rows_weighted += binomial(part, 2) * Int(static_cast<long>(i) - 1);
      }
      Int cols2 = 0, cols3 = 0, cols_weighted = 0;
      for (unsigned j = 1; j <= conj.height(); ++j) {
        const long part = conj.parts()[j - 1];
        cols2 += binomial(part, 2);
        cols3 += binomial(part, 3);
        cols_weighted += binomial(part, 2) * Int(static_cast<long>(j) - 1);
      }
      num = (rows2 + cols2) + 2 * (rows3 + cols3) - (rows_weighted + cols_weighted) +
            Int(n - 2) * (rows2 - cols2) + binomial(n, 3) - binomial(n, 2);
    } break;
  }
  return exact_div(hook_count(mu) * num, falling_factorial(mu.n(), 3), "skew_count_m3");
}

Int skew_count_m4(const Partition& mu) {
  require_strip(mu, 4, "skew_count_m4");
  const long n = static_cast<long>(mu.n());
  const Int q10 = q_minus(mu, 1, 0);
  const Int q20 = q_minus(mu, 2, 0);
  const Int q30 = q_minus(mu, 3, 0);
  const Int q21 = q_minus(mu, 2, 1);
  const Int s01 = q_plus(mu, 0, 1);
  const Int s02 = q_plus(mu, 0, 2);
  const Int s11 = q_plus(mu, 1, 1);
  const Rat half(1, 2);
  const Rat n_less_nine_halves = Rat(n) - Rat(9, 2);
  Rat num = half * Rat(Int(n - 2) * Int(n - 7) * q10) +
            Rat(6 * q20 + 6 * q30 - 6 * q21) + half * Rat(q10 * q10) +
            n_less_nine_halves * Rat(s01) + Rat(Int(2 * n - 9) * s02) -
            n_less_nine_halves * Rat(s11) +
            Rat(binomial(n, 4) - 3 * binomial(n, 3) + 2 * binomial(n, 2));
  const Rat count = Rat(hook_count(mu)) * num / Rat(falling_factorial(mu.n(), 4));
  return to_integer(count, "skew_count_m4");
}

Int kostka_hook(const Partition& mu, unsigned long m) {
  if (m < 1 || m > mu.n())
    throw DomainError("kostka_hook: needs 1 <= m <= n, got m = " + std::to_string(m) +
                      ", n = " + std::to_string(mu.n()));
  if (mu.first_part() < m) return 0;
  switch (m) {
    case 1:
      return hook_count(mu);
    case 2:
      return skew_count_m2(mu, M2Variant::qform);
    case 3:
      return skew_count_m3(mu, M3Variant::qform);
    case 4:
      return skew_count_m4(mu);
    default:
      return frobenius_skew(mu, Partition({static_cast<unsigned>(m)}));
  }
}

}  // namespace skewtab
